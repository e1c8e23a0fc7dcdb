"""Image cipher built on linear fractional transformation S-boxes over
GF(2^8) and a Lorenz-system keystream, with the analysis harness used to
evaluate both."""

from .cipher import CipherKey, ImageBuffer, decrypt, encrypt
from .gf2n import BinaryPoly, FieldSpec, field
from .golden import DEFAULT_LFT, PRIMITIVE_POLY_MASKS, REFERENCE_SBOX, golden_assets
from .keyfile import KeyFile, parse_key_file, parse_key_text
from .lorenz import Keystream, LorenzParams, keystream
from .netpbm import read_image, read_raw, write_image
from .sbox import LftParams, LftSBox, build_family, build_sbox, invert_sbox, load_external_sbox
from .sbox_analysis import StrengthReport, analyze

__version__ = "0.1.0"

__all__ = [
    "BinaryPoly",
    "CipherKey",
    "DEFAULT_LFT",
    "FieldSpec",
    "ImageBuffer",
    "KeyFile",
    "Keystream",
    "LftParams",
    "LftSBox",
    "LorenzParams",
    "PRIMITIVE_POLY_MASKS",
    "REFERENCE_SBOX",
    "StrengthReport",
    "analyze",
    "build_family",
    "build_sbox",
    "decrypt",
    "encrypt",
    "field",
    "golden_assets",
    "invert_sbox",
    "keystream",
    "load_external_sbox",
    "parse_key_file",
    "parse_key_text",
    "read_image",
    "read_raw",
    "write_image",
]
