"""Recover the aether parameters from a measured window.

If the two window edges were measured, the exact inversion gives back
(beta, beta_t).  The large-beta_t shortcuts (center ~ -beta,
width ~ 2/(beta_t gamma^2)) get better as tachyons get faster.
"""
from tachyon_epr.window import approx_beta, approx_beta_t, compute_window, invert_beta, invert_beta_t

beta = -0.3
print(f"{'beta_t':>8} {'exact beta_t':>14} {'approx beta_t':>14} {'approx beta':>12}")
for beta_t in (2.0, 10.0, 100.0, 1000.0, 10000.0):
    w = compute_window(1.0, beta_t, beta)
    assert abs(invert_beta(w) - beta) < 1e-9
    print(f"{beta_t:8g} {invert_beta_t(w):14.6f} {approx_beta_t(w):14.6f} {approx_beta(w):12.8f}")
