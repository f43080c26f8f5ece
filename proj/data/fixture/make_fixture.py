#!/usr/bin/env python3
"""Regenerates the synthetic 5-series fixture (sales.csv / calendar.csv).

The fixture mimics the M5 file schemas on a 200-day horizon so the full
pipeline can run in CI without the real dataset. Deterministic by seed.
"""
import csv
import datetime
import random

T = 200
START = datetime.date(2011, 1, 29)  # a Saturday; wday=1 is Saturday
WEEKDAY_NAMES = ["Saturday", "Sunday", "Monday", "Tuesday", "Wednesday", "Thursday", "Friday"]
EVENTS = {30: ("SuperBowl", "Sporting"), 80: ("Easter", "Religious"), 148: ("MemorialDay", "National")}

SERIES = [
    ("FOODS_1_001", "CA_1"),
    ("FOODS_1_001", "CA_2"),
    ("FOODS_1_002", "CA_1"),
    ("FOODS_1_003", "CA_3"),
    ("FOODS_1_004", "CA_2"),
]

rng = random.Random(20240817)


def main() -> None:
    with open("calendar.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["date", "wm_yr_wk", "weekday", "wday", "month", "year", "d",
                    "event_name_1", "event_type_1", "event_name_2", "event_type_2",
                    "snap_CA", "snap_TX", "snap_WI"])
        for d in range(1, T + 1):
            date = START + datetime.timedelta(days=d - 1)
            wday = (d - 1) % 7 + 1
            wm_yr_wk = 11101 + (d - 1) // 7
            ev = EVENTS.get(d, ("", ""))
            snap_ca = 1 if date.day <= 10 else 0
            snap_tx = 1 if date.day in (1, 3, 5, 6, 7, 9, 11, 12, 13, 15) else 0
            snap_wi = 1 if 2 <= date.day <= 11 else 0
            w.writerow([date.isoformat(), wm_yr_wk, WEEKDAY_NAMES[wday - 1], wday,
                        date.month, date.year, f"d_{d}", ev[0], ev[1], "", "",
                        snap_ca, snap_tx, snap_wi])

    with open("sales.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["id", "item_id", "dept_id", "cat_id", "store_id", "state_id"] +
                   [f"d_{d}" for d in range(1, T + 1)])
        for idx, (item, store) in enumerate(SERIES):
            base = 3.0 + idx
            season = [1.4, 1.3, 0.8, 0.7, 0.8, 0.9, 1.1]
            row = [f"{item}_{store}_validation", item, "FOODS_1", "FOODS", store, "CA"]
            for d in range(1, T + 1):
                mean = base * season[(d - 1) % 7] * (1.0 + 0.001 * d)
                lam = max(mean + rng.gauss(0, 0.5), 0.05)
                # simple Poisson sampler, deterministic under the seeded rng
                l, k, p = pow(2.718281828459045, -lam), 0, 1.0
                while True:
                    p *= rng.random()
                    if p <= l:
                        break
                    k += 1
                row.append(k)
            w.writerow(row)


if __name__ == "__main__":
    main()
