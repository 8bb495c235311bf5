"""Convert the public Planetoid benchmark files into the neutral TSV dataset format."""

__version__ = "0.1.0"

from .bundle import PlanetoidBundle, assemble, load_bundle
from .convert import EXPECTED_COUNTS, ConvertError, convert
