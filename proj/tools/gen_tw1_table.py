#!/usr/bin/env python3
"""Generate the Tracy-Widom (beta = 1) CDF table shipped with tempcom.

Method: Nystrom discretisation of the Fredholm determinant

    F1(s) = det(I - K_s) on L^2(0, inf),   K_s(x, y) = Ai(x + y + s),

with Gauss-Legendre nodes on a truncated interval [0, L(s)], L(s) chosen so
that Ai(s + L) is below 1e-20. In the left tail the result agrees with the
asymptotic expansion tau1 |s|^(-1/16) exp(-|s|^3/24 - |s|^(3/2)/(3 sqrt 2))
to the order of the expansion's own error.

Outputs
  data/tw1_cdf.txt              versioned text table "x F(x)"
  include/tempcom/tw1_table.hpp the same grid as constexpr arrays

Usage: tools/gen_tw1_table.py [repo-root]
"""
import sys
from pathlib import Path

import numpy as np
from scipy.special import airy

VERSION = 1
X_MIN, X_MAX, STEP = -10.0, 8.0, 0.01
NODES = 96


def tw1_cdf(s):
    length = max(10.0, 18.0 - s)
    u, w = np.polynomial.legendre.leggauss(NODES)
    x = 0.5 * length * (u + 1.0)
    w = 0.5 * length * w
    sw = np.sqrt(w)
    ai = airy(s + x[:, None] + x[None, :])[0]
    k = sw[:, None] * ai * sw[None, :]
    return float(np.linalg.det(np.eye(NODES) - k))


def moments(xs, fs):
    # integration by parts on [a, b]; F(a) ~ 0 and 1 - F(b) ~ 0
    a, b = xs[0], xs[-1]
    h = xs[1] - xs[0]
    def simpson(y):
        return h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())
    m1 = b * fs[-1] - a * fs[0] - simpson(fs)
    m2 = b * b * fs[-1] - a * a * fs[0] - 2.0 * simpson(xs * fs)
    return m1, np.sqrt(m2 - m1 * m1)


def main():
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1]
    count = int(round((X_MAX - X_MIN) / STEP)) + 1
    xs = np.array([X_MIN + i * STEP for i in range(count)])
    vals = [tw1_cdf(float(x)) for x in xs]
    fs = np.array(vals)
    if not np.all(np.diff(fs) > 0):
        raise SystemExit("table is not strictly increasing")
    mean, sd = moments(xs, fs)
    median = float(np.interp(0.5, fs, xs))
    print(f"mean={mean:.10f} sd={sd:.10f} median~{median:.6f}")

    header = [
        f"# tempcom TW1 CDF table, version {VERSION}",
        f"# Fredholm determinant det(I - Ai(x+y+s)) on L2(0,inf), {NODES} Gauss-Legendre nodes",
        f"# grid: x in [{X_MIN}, {X_MAX}], step {STEP}, {count} points",
        f"# mean {mean:.10f} sd {sd:.10f}",
        "# columns: x F(x)",
    ]
    lines = header + [f"{x:.2f} {v!r}" for x, v in zip(xs, vals)]
    (root / "data").mkdir(exist_ok=True)
    (root / "data" / "tw1_cdf.txt").write_text("\n".join(lines) + "\n")

    body = ",\n".join(f"    {float(v)!r}" for v in vals)
    hpp = f"""// Generated by tools/gen_tw1_table.py (table version {VERSION}). Do not edit.
#pragma once

#include <array>
#include <cstddef>

namespace tempcom::detail {{

inline constexpr int kTw1TableVersion = {VERSION};
inline constexpr double kTw1GridMin = {X_MIN!r};
inline constexpr double kTw1GridStep = {STEP!r};
inline constexpr std::size_t kTw1GridSize = {count};

inline constexpr std::array<double, kTw1GridSize> kTw1Cdf = {{
{body}
}};

}}  // namespace tempcom::detail
"""
    (root / "include" / "tempcom").mkdir(parents=True, exist_ok=True)
    (root / "include" / "tempcom" / "tw1_table.hpp").write_text(hpp)


if __name__ == "__main__":
    main()
