#!/usr/bin/env python3
"""Regenerates the bundled synthetic graphite-like optical tables.

The dataset is hermetic test data, not measured optical constants. Each
axis is sampled from a documented analytic absorption model on a
log-spaced photon-energy grid; only the product eps'' = 2 n k matters to
the dispersion transform, so the refractive-index column is fixed at 1.

  in-plane (x):     Drude    eps''(w) = wp^2 g / (w (w^2 + g^2)),  wp = 7.0 eV,  g = 7.0 eV
  out-of-plane (z): Lorentz  eps''(w) = wp^2 g w / ((w0^2 - w^2)^2 + g^2 w^2),
                             wp = 26.0 eV, w0 = 19.0 eV, g = 10.0 eV
"""
import math
import os

W_MIN, W_MAX, PER_DECADE = 1e-2, 2e3, 32

def drude_x(w):
    wp, g = 7.0, 7.0
    return wp * wp * g / (w * (w * w + g * g))

def lorentz_z(w):
    wp, w0, g = 26.0, 19.0, 10.0
    d = w0 * w0 - w * w
    return wp * wp * g * w / (d * d + g * g * w * w)

def write(path, eps2, header):
    decades = math.log10(W_MAX / W_MIN)
    n = int(math.ceil(decades * PER_DECADE)) + 1
    with open(path, "w") as f:
        f.write(header)
        f.write("# columns: energy_eV, n, k   (eps'' = 2 n k)\n")
        for i in range(n):
            w = W_MIN * (W_MAX / W_MIN) ** (i / (n - 1))
            k = 0.5 * eps2(w)
            f.write("%.9e, 1.0, %.9e\n" % (w, k))

here = os.path.dirname(os.path.abspath(__file__))
write(os.path.join(here, "graphite_like_x.csv"), drude_x,
      "# synthetic graphite-like optical data, in-plane axis (x)\n"
      "# Drude absorption: wp = 7.0 eV, gamma = 7.0 eV\n")
write(os.path.join(here, "graphite_like_z.csv"), lorentz_z,
      "# synthetic graphite-like optical data, out-of-plane axis (z)\n"
      "# Lorentz absorption: wp = 26.0 eV, w0 = 19.0 eV, gamma = 10.0 eV\n")
print("wrote graphite_like_x.csv, graphite_like_z.csv")
