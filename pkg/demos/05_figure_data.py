"""Write the curve files behind the area and dimension plots.

Equivalent to:  fuzzy-sphere figures --N 2,4,8,16 --out figure_data
Each CSV starts with a '#' JSON line, so gnuplot can plot it directly:
    plot 'figure_data/fuzzy_N8.csv' using 1:4 with lines

Run:  python demos/05_figure_data.py [outdir]
"""
import sys

from fuzzy_sphere.cli import RunConfig, run_figures
from fuzzy_sphere.io import read_curve

out = sys.argv[1] if len(sys.argv) > 1 else "figure_data"
paths = run_figures(RunConfig("figures", n_list=[2, 4, 8, 16], output_path=out))
for p in paths:
    if p.suffix == ".csv":
        curve = read_curve(p)
        best = max(curve.points, key=lambda q: q.area if q.lambda_ > 1 else 0)
        print(f"{p}: {len(curve.points)} rows, largest area above Lambda=1 is {best.area:.3f} at {best.lambda_:.3f}")
    else:
        print(p)
