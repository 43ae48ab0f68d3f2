"""Round trips on one clock: relativity principle vs. a preferred frame.

If every inertial frame sees isotropic tachyons, a suitably moving frame
can return a signal before it was sent.  If tachyons are isotropic only in
the aether, the round trip is positive for every frame speed, including
the speeds where one leg is instantaneous.
"""
from tachyon_epr.causality import aether_round_trip, rp_round_trip

beta_g = 8.0
print(f"relativity principle, beta_g = {beta_g}: paradox above beta = {2 * beta_g / (1 + beta_g ** 2):.5f}")
for beta in (0.1, 0.2, 0.3, 0.5, 0.9):
    r = rp_round_trip(beta_g, beta)
    print(f"  beta = {beta:4}: elapsed {r.elapsed:+.6f}  {'PARADOX' if r.paradoxical else ''}")

print("\naether model, beta_t = 8:")
for beta in (-0.9, -1 / 8, 0.0, 1 / 8, 0.9):
    print(f"  beta = {beta:+.4f}: elapsed {aether_round_trip(8.0, beta).elapsed:+.6f}")
