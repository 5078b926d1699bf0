"""
The exponential weights f_i and F_i.

    f_i(w) = exp(-w^3/3 + alpha_i w^2 + beta_i w)
    F_1 = f_1,  F_i = f_i / f_{i-1} = exp((alpha_i - alpha_{i-1}) w^2 + (beta_i - beta_{i-1}) w)

Both accept scalars or arrays of complex nodes.
"""

import numpy as np

from kernels.point_config import PointConfig


def log_f(cfg: PointConfig, i: int, w):
    cfg.check_index(i)
    w = np.asarray(w, dtype=complex)
    return -w ** 3 / 3.0 + cfg.a(i) * w ** 2 + cfg.b(i) * w


def log_F(cfg: PointConfig, i: int, w):
    cfg.check_index(i)
    if i == 1:
        return log_f(cfg, 1, w)
    w = np.asarray(w, dtype=complex)
    return (cfg.a(i) - cfg.a(i - 1)) * w ** 2 + (cfg.b(i) - cfg.b(i - 1)) * w


def _unwrap(value):
    return complex(value) if np.ndim(value) == 0 else value


def eval_f(cfg: PointConfig, i: int, w):
    return _unwrap(np.exp(log_f(cfg, i, w)))


def eval_F(cfg: PointConfig, i: int, w):
    return _unwrap(np.exp(log_F(cfg, i, w)))
