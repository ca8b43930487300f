"""Error-versus-m sweeps for the nine benchmark examples, one CSV per example.

    python3 scripts/reproduce_figures.py --out-dir results/figures --n-max 80
"""

import dataclasses
import math
from pathlib import Path

from _config import parse_config

from sincconv.bench import fit_rate, run_sweep, write_csv


@dataclasses.dataclass(frozen=True)
class FigureConfig:
    """Sweep settings; n runs over n_min..n_max in steps of n_step (m = 2n + 1)."""

    out_dir: str = "results/figures"
    examples: tuple = (1, 2, 3, 4, 5, 6, 7, 8, 9)
    n_min: int = 2
    n_max: int = 80
    n_step: int = 2
    workers: int = 1
    matfun: str = "auto"
    timings: bool = True


def main(cfg: FigureConfig) -> None:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ns = range(cfg.n_min, cfg.n_max + 1, cfg.n_step)
    for i in cfg.examples:
        recs = run_sweep([i], ["se", "de"], ns, matfun_method=cfg.matfun, workers=cfg.workers)
        path = out / f"example{i}.csv"
        with path.open("w", newline="") as fh:
            write_csv(recs, fh, timings=cfg.timings)
        best = {m: min((r.max_error for r in recs if r.method == m and math.isfinite(r.max_error)), default=math.nan) for m in ("se", "de")}
        print(f"example {i}: best SE {best['se']:.3g}, best DE {best['de']:.3g} -> {path}")
        for method, model in (("se", "SE_root_exp"), ("de", "DE_milog")):
            try:
                fit = fit_rate([r for r in recs if r.method == method], model)
                print(f"  {method} slope {fit.c:.4f} over {fit.points_used} points")
            except Exception as exc:  # noqa: BLE001 - report and carry on
                print(f"  {method} slope unavailable: {exc}")


if __name__ == "__main__":
    main(parse_config(FigureConfig))
