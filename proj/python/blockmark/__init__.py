"""Block-based grayscale image watermarking toolkit.

Images are 2-D ``numpy.uint8`` arrays shaped ``(height, width)``; marks are
2-D arrays of 0/1 bytes. All operations are deterministic given their seeds.
"""

from ._core import (
    KeyFile,
    ParseError,
    ber,
    brightness_shift,
    dct_quantize,
    embed,
    extract,
    gaussian_noise,
    make_key,
    mean_filter,
    median_filter,
    mse,
    ncc,
    psnr,
    read_pbm,
    read_pgm,
    salt_pepper,
    splitmix64_stream,
    write_pbm,
    write_pgm,
)

__version__ = "0.1.0"

__all__ = [
    "KeyFile",
    "ParseError",
    "ber",
    "brightness_shift",
    "dct_quantize",
    "embed",
    "extract",
    "gaussian_noise",
    "make_key",
    "mean_filter",
    "median_filter",
    "mse",
    "ncc",
    "psnr",
    "read_pbm",
    "read_pgm",
    "salt_pepper",
    "splitmix64_stream",
    "write_pbm",
    "write_pgm",
]
