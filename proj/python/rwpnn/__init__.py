"""Time-series anomaly detection: recurrent autoencoder + online
multi-receptive-field wavelet density ensemble."""

try:
    from ._core import *  # noqa: F401,F403  packaged install
except ImportError:  # development layout: _core sits on PYTHONPATH
    from _core import *  # noqa: F401,F403

__version__ = "0.1.0"
