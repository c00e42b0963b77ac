"""The two-round game end to end, plus a small Monte Carlo sweep.

Round one samples G(n, p) with p = c * n^(-1/m2(H)) and the adversary colours
it without a monochromatic H; round two adds G(n, q) edges and the engine
decides whether the colouring survives.  Everything is reproducible from the
master seed.

Run with:  python3 demos/two_round_game.py
"""

import ramseygame as rg
from ramseygame.game import GameConfig, monte_carlo, play_two_round, sweep_rows_to_csv

k3 = rg.complete_graph(3)

cfg = GameConfig(n=40, pattern=k3, palette=2, c=0.6, q_coeff=5.0,
                 colouring_source="adversarial-greedy", seed=12)
tr = play_two_round(cfg)
print(f"single game at n={cfg.n}: verdict {tr.verdict}")
print(f"  round one: {tr.round_one_graph.e} edges,"
      f" colouring source {tr.colouring_source_used}")
print(f"  green-forced pairs after round one: {tr.forced_pair_counts.get('green', 0)}")
print(f"  round two added {len(tr.round_two_edges)} edges")

grid = [GameConfig(n=40, pattern=k3, palette=2, c=c, q_coeff=5.0,
                   colouring_source="adversarial-greedy")
        for c in (0.4, 0.6, 0.8)]
print("\nsweep over the round-one coefficient c (20 trials each):")
print(sweep_rows_to_csv(monte_carlo(grid, trials=20, master_seed=7)))
