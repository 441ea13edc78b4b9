"""Shape-aware blocked GEMM and blocked LU driven by an analytical cache model."""

__version__ = "0.1.0"
