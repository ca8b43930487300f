"""Smallest real part of the spectrum of I^(-1)_m over a range of orders."""

import dataclasses
import time
from pathlib import Path

from _config import parse_config

from sincconv.spectra import spectrum_im1, write_summary_csv


@dataclasses.dataclass(frozen=True)
class PositivityConfig:
    m_max: int = 513
    m_step: int = 8
    out: str = "results/im1_positivity.csv"


def main(cfg: PositivityConfig) -> None:
    t0 = time.perf_counter()
    reports = [spectrum_im1(m) for m in range(1, cfg.m_max + 1, cfg.m_step)]
    Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
    with open(cfg.out, "w", newline="") as fh:
        write_summary_csv(reports, fh)
    worst = min(reports, key=lambda r: r.min_real_part)
    status = "all positive" if worst.min_real_part > 0 else "NEGATIVE real part found"
    print(f"{len(reports)} orders up to m={reports[-1].m}: {status}; smallest {worst.min_real_part:.6g} at m={worst.m}")
    print(f"{time.perf_counter() - t0:.1f} s, summary in {cfg.out}")


if __name__ == "__main__":
    main(parse_config(PositivityConfig))
