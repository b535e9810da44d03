"""Independent oracle for the delay response of the fiber Kerr shutter.

For a gaussian pump the z-integral of the walked-off intensity has a closed
form in erf, so the nonlinear phase is evaluated without numerical quadrature.
The phase is scaled so the centred full sweep gives pi, passed through
sin^2(phi/2), and convolved on a fine grid with the signal weight
gaussian(100 fs FWHM) * rect(380 fs).  Prints FWHM values used to freeze
expectations in the C++ tests.
"""
import numpy as np
from scipy.special import erf

DW_L = 1.6352040497315  # ps, |d_w| * L from sellmeier_oracle.py
PUMP_FWHM = 0.410        # ps
SIG_GAUSS = 0.100
SIG_RECT = 0.380


def sweep_fraction(tau, fwhm=PUMP_FWHM, dwl=DW_L):
    s = fwhm / (2 * np.sqrt(2 * np.log(2)))
    a = (tau + dwl / 2) / (np.sqrt(2) * s)
    b = (tau - dwl / 2) / (np.sqrt(2) * s)
    return 0.5 * (erf(a) - erf(b))


def fwhm_of(x, y):
    m = y.max()
    h = m / 2
    i = np.argmax(y)
    l = i
    while y[l] >= h:
        l -= 1
    r = i
    while y[r] >= h:
        r += 1
    xl = x[l] + (h - y[l]) * (x[l + 1] - x[l]) / (y[l + 1] - y[l])
    xr = x[r - 1] + (h - y[r - 1]) * (x[r] - x[r - 1]) / (y[r] - y[r - 1])
    return xr - xl


dt = 0.0005
t = np.arange(-6, 6 + dt / 2, dt)
peak = sweep_fraction(0.0)
phi = np.pi * sweep_fraction(t) / peak
eta = np.sin(phi / 2) ** 2

sg = SIG_GAUSS / (2 * np.sqrt(2 * np.log(2)))
w = 0.5 * (erf((t + SIG_RECT / 2) / (np.sqrt(2) * sg)) - erf((t - SIG_RECT / 2) / (np.sqrt(2) * sg))) / SIG_RECT
w /= w.sum() * dt
tot = np.convolve(eta, w, mode="same") * dt

print("intrinsic FWHM [ps] =", fwhm_of(t, eta))
print("total FWHM [ps]     =", fwhm_of(t, tot))
print("total peak          =", tot.max())

# zero walk-off: response width of sin^2(pi/2 * I(t)/I0)
eta0 = np.sin(np.pi / 2 * np.exp(-4 * np.log(2) * t**2 / PUMP_FWHM**2)) ** 2
print("zero-walkoff intrinsic FWHM [ps] =", fwhm_of(t, eta0))
