import numpy as np
import pytest

from lftcipher import CipherKey, FieldSpec, ImageBuffer, LorenzParams, build_family


def make_natural_image(seed: int, width: int = 256, height: int = 256) -> ImageBuffer:
    """Deterministic synthetic photograph-like image: smooth low-frequency
    content plus soft blobs and mild sensor noise, so adjacent pixels are
    strongly correlated and the histogram is far from flat."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:height, 0:width].astype(np.float64)
    img = 120 + 55 * np.sin(2 * np.pi * xx / 97 + rng.uniform(0, 2 * np.pi)) * np.cos(
        2 * np.pi * yy / 71 + rng.uniform(0, 2 * np.pi)
    )
    for _ in range(6):
        cx = rng.uniform(0, width)
        cy = rng.uniform(0, height)
        r = rng.uniform(15, 60)
        amp = rng.uniform(-75, 75)
        img += amp * np.exp(-(((xx - cx) ** 2 + (yy - cy) ** 2) / (2 * r * r)))
    img += rng.normal(0, 2.0, img.shape)
    return ImageBuffer.from_array(np.clip(img, 0, 255).astype(np.uint8))


@pytest.fixture(scope="session")
def field_p1() -> FieldSpec:
    return FieldSpec(0x11D)


@pytest.fixture(scope="session")
def gf16() -> FieldSpec:
    # x^4 + x^3 + 1, primitive
    return FieldSpec(0b11001)


@pytest.fixture(scope="session")
def family():
    return build_family(32, 22, 11, 8)


@pytest.fixture(scope="session")
def test_key() -> CipherKey:
    return CipherKey.create(LorenzParams(x0=1.1, y0=2.3, z0=3.7))


@pytest.fixture(scope="session")
def natural_image() -> ImageBuffer:
    return make_natural_image(seed=7)
