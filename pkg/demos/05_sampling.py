"""Exact samples from a patch prior at any diffusion time.

Orthogonal filters turn the product of experts into independent responses,
so a draw is: sample each expert, then map the responses back through the
filters.  The empirical covariance matches the closed form, and diffusion
only adds 2t on the filter span.

Run 02_train_patch_prior.py first.
"""
from pathlib import Path

import numpy as np

from gmdiff.archive import load_model
from gmdiff.cli import mosaic
from gmdiff.imageio import write_image

OUT = Path(__file__).parent / "out"
model, _ = load_model(OUT / "patch_b5.zip")
e = model.experts
K, n2 = model.filters, model.norms ** 2
var0 = np.sum(e.weights * (e.means ** 2 + e.sigma0[:, None] ** 2), axis=1)
span = (K / n2) @ K.T

for t in (0.0, 0.005, 0.02):
    X = model.sample(t, np.random.default_rng(1), 50_000)
    C = (K * (var0 / n2 ** 2)) @ K.T + 2 * t * span
    err = np.linalg.norm(X.T @ X / len(X) - C) / np.linalg.norm(C)
    print(f"t = {t:<6} relative covariance error {err:.2%}, mean patch value {X.mean():+.1e}")

P = model.sample(0.0, np.random.default_rng(2), 64)
write_image(OUT / "samples.pgm", mosaic(P.reshape(-1, model.b, model.b)))
write_image(OUT / "filters.pgm", mosaic(K.T.reshape(-1, model.b, model.b)))
print(f"wrote {OUT / 'samples.pgm'} and {OUT / 'filters.pgm'}")
