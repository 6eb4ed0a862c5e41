#!/usr/bin/env python3
"""Regenerates the fixture CSVs under fixtures/ from the transcribed
normalized objective tables of the reference study (step-1 and step-2
results per sediment). Keeps the transcription in one reviewable place and
verifies that the f_r = 0 column of each step-2 table matches the step-1
values before writing anything."""

import os

V_LEVELS = [15, 22, 29, 38]
W_LEVELS = [0, 3, 6, 9, 12]
F_LEVELS = [0, 10, 30, 50]

# Step-1 tables: f1 and f2 by v (rows) x omega_r (cols). 0.00 in f1 marks a
# zero-mass run (no sample collected) -> excluded row.
TABLE4 = {
    "coarse": {
        "f1": [
            [0.00, 0.00, 4.69, 4.18, 3.10],
            [4.93, 0.00, 6.15, 4.03, 3.34],
            [6.97, 7.30, 6.97, 2.96, 3.17],
            [4.67, 4.66, 10.00, 6.50, 2.63],
        ],
        "f2": [
            [4.55, 8.42, 7.02, 5.75, 4.80],
            [2.36, 3.54, 4.63, 3.48, 2.73],
            [1.51, 1.79, 4.83, 2.09, 2.30],
            [1.11, 1.40, 1.35, 1.78, 1.37],
        ],
    },
    "medium": {
        "f1": [
            [10.00, 9.96, 8.12, 4.12, 4.87],
            [7.59, 9.28, 8.06, 5.41, 3.99],
            [6.45, 8.46, 6.56, 4.80, 1.41],
            [6.30, 8.46, 7.11, 6.56, 5.27],
        ],
        "f2": [
            [7.39, 10.00, 8.01, 4.69, 6.21],
            [4.05, 3.29, 5.46, 5.11, 2.30],
            [1.96, 2.16, 2.65, 1.71, 1.00],
            [1.12, 1.56, 2.00, 1.21, 1.99],
        ],
    },
    "silt": {
        "f1": [
            [7.51, 10.00, 3.07, 2.82, 2.46],
            [4.66, 3.80, 3.07, 2.58, 2.95],
            [4.41, 4.41, 3.55, 3.43, 2.82],
            [5.20, 5.62, 4.04, 4.04, 3.92],
        ],
        "f2": [
            [5.61, 4.90, 7.08, 8.21, 9.39],
            [2.22, 3.85, 4.70, 4.62, 3.11],
            [1.00, 2.70, 2.48, 3.49, 2.25],
            [1.08, 1.94, 2.25, 2.53, 2.54],
        ],
    },
}

# Step-2 tables: rows are the (v, omega_r) pairs kept after the step-1
# multiple comparison; columns are f_r = 0 (the helical pattern), 10, 30, 50.
TABLE5 = {
    "coarse": {
        "pairs": [(15, 9), (15, 12), (22, 9), (22, 12), (29, 9), (29, 12), (38, 12)],
        "f1": [
            [4.18, 2.10, 2.08, 2.97],
            [3.10, 2.46, 2.46, 2.67],
            [4.03, 2.17, 2.38, 3.01],
            [3.34, 2.35, 2.17, 2.69],
            [2.96, 2.17, 1.98, 2.46],
            [3.17, 1.91, 1.91, 2.55],
            [2.63, 2.07, 1.87, 2.84],
        ],
        "f2": [
            [5.75, 3.45, 3.15, 5.26],
            [4.80, 4.29, 4.44, 10.00],
            [3.48, 2.12, 1.98, 1.85],
            [2.73, 2.37, 1.95, 2.22],
            [2.09, 1.57, 1.72, 1.85],
            [2.30, 1.39, 1.55, 1.50],
            [1.37, 1.00, 1.05, 1.38],
        ],
    },
    "medium": {
        "pairs": [(29, 12)],
        "f1": [[1.41, 1.07, 1.00, 1.00]],
        "f2": [[1.00, 3.30, 3.39, 3.73]],
    },
    "silt": {
        "pairs": [
            (15, 6), (15, 9), (15, 12), (22, 3), (22, 6), (22, 9), (22, 12),
            (29, 3), (29, 6), (29, 9), (29, 12), (38, 6), (38, 9), (38, 12),
        ],
        "f1": [
            [3.07, 1.00, 2.58, 2.46],
            [2.82, 3.31, 3.31, 4.41],
            [2.46, 5.01, 5.38, 6.35],
            [3.80, 4.41, 5.38, 5.01],
            [3.07, 2.58, 3.68, 3.19],
            [2.58, 5.50, 6.59, 7.32],
            [2.95, 5.14, 5.86, 5.14],
            [4.41, 3.31, 2.58, 2.70],
            [3.55, 4.04, 4.28, 5.38],
            [3.43, 2.58, 4.65, 4.53],
            [2.82, 1.73, 2.70, 3.19],
            [4.04, 4.53, 6.23, 5.26],
            [4.04, 3.92, 4.89, 5.01],
            [3.92, 5.14, 6.11, 5.38],
        ],
        "f2": [
            [7.08, 7.97, 7.68, 5.53],
            [8.21, 6.24, 7.03, 5.67],
            [9.39, 6.07, 6.98, 10.00],
            [3.85, 2.87, 2.73, 2.34],
            [4.70, 5.07, 3.90, 3.08],
            [4.62, 4.74, 5.60, 5.13],
            [3.11, 3.98, 4.46, 3.83],
            [2.70, 2.04, 1.85, 1.75],
            [2.48, 2.78, 2.52, 2.13],
            [3.49, 2.64, 2.98, 2.58],
            [2.25, 3.57, 3.94, 2.99],
            [2.25, 1.93, 1.81, 1.38],
            [2.53, 1.79, 1.95, 1.70],
            [2.54, 2.06, 1.89, 1.72],
        ],
    },
}

SEDIMENT_NAME = {"coarse": "coarse_sand", "medium": "medium_sand", "silt": "silt"}
HEADER = "sediment,kind,v_mm_s,omega_rad_s,f_r_hz,f1_raw,f2_raw,f1_norm,f2_norm,excluded,n_trials"


def check_consistency():
    for key, t5 in TABLE5.items():
        t4 = TABLE4[key]
        for row, (v, w) in enumerate(t5["pairs"]):
            i, j = V_LEVELS.index(v), W_LEVELS.index(w)
            assert t5["f1"][row][0] == t4["f1"][i][j], (key, v, w, "f1")
            assert t5["f2"][row][0] == t4["f2"][i][j], (key, v, w, "f2")


def row_line(sediment, kind, v, w, f, f1, f2, excluded):
    f1_field = "" if excluded else f"{f1:.2f}"
    f2_field = f"{f2:.2f}"
    return (f"{sediment},{kind},{v:.3f},{w:.3f},{f:.3f},,,"
            f"{f1_field},{f2_field},{'true' if excluded else 'false'},3")


def write_table4(key):
    sediment = SEDIMENT_NAME[key]
    t = TABLE4[key]
    lines = [
        f"# step-1 objective table ({key} sand)" if key != "silt" else "# step-1 objective table (silt)",
        "# normalized f1/f2 cells by v in rows (15/22/29/38 mm/s) and omega_r in",
        "# columns (0/3/6/9/12 rad/s); omega_r = 0 is the linear pattern P1.",
        "# f1 printed as 0.00 means no sample was collected: the row is excluded",
        "# from optimization and only its printed f2 is kept for reference.",
        HEADER,
    ]
    for i, v in enumerate(V_LEVELS):
        for j, w in enumerate(W_LEVELS):
            f1, f2 = t["f1"][i][j], t["f2"][i][j]
            excluded = f1 == 0.0
            kind = "linear" if w == 0 else "helical"
            lines.append(row_line(sediment, kind, v, w, 0, f1, f2, excluded))
    return "\n".join(lines) + "\n"


def write_table5(key):
    sediment = SEDIMENT_NAME[key]
    t = TABLE5[key]
    lines = [
        f"# step-2 objective table ({key} sand)" if key != "silt" else "# step-2 objective table (silt)",
        "# normalized f1/f2 cells by selected (v, omega_r) pairs in rows and f_r in",
        "# columns (0/10/30/50 Hz); the f_r = 0 column is the helical pattern P2",
        "# carried over from step 1.",
        HEADER,
    ]
    for row, (v, w) in enumerate(t["pairs"]):
        for col, f in enumerate(F_LEVELS):
            f1, f2 = t["f1"][row][col], t["f2"][row][col]
            kind = "helical" if f == 0 else "zigzag"
            lines.append(row_line(sediment, kind, v, w, f, f1, f2, excluded=False))
    return "\n".join(lines) + "\n"


def main():
    check_consistency()
    out_dir = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")
    os.makedirs(out_dir, exist_ok=True)
    for key in ("coarse", "medium", "silt"):
        with open(os.path.join(out_dir, f"table4_{key}.csv"), "w") as f:
            f.write(write_table4(key))
        with open(os.path.join(out_dir, f"table5_{key}.csv"), "w") as f:
            f.write(write_table5(key))
    print(f"wrote 6 fixture files under {out_dir}")


if __name__ == "__main__":
    main()
