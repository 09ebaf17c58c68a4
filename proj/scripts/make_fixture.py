#!/usr/bin/env python3
"""Regenerates data/synthetic_flights.csv, the bundled hermetic fixture.

Deterministic: delayed/total counts per airport and window are fixed by the
profile tables below; only departure minutes, destinations, and airlines are
drawn from a seeded RNG. The traffic shape mirrors the bundled Florida
registry: the large internationals carry heavy midday delay load, executive
and regional fields stay quiet, and the Miami area is saturated so no
assistant is available there.
"""

import csv
import random
import sys

AIRPORTS = ["MCO", "SFB", "TPA", "PIE", "MLB", "DAB", "MIA", "FLL", "FXE", "PNS",
            "VPS", "EYW", "PBI", "RSW", "PGD", "GNV", "TLH", "ECP", "VRB", "SRQ", "JAX"]
AIRLINES = ["AA", "DL", "UA", "WN", "B6", "NK", "F9"]
DESTS = ["ATL", "JFK", "ORD", "DFW", "CLT", "LGA", "BOS", "IAH", "DCA", "DEN"]

# (f, d) per airport for each profile; airports not listed are idle.
HIGH = {
    "MCO": (24, 12), "MIA": (21, 9), "FLL": (22, 11), "TPA": (20, 9),
    "PBI": (10, 5), "RSW": (10, 4), "JAX": (10, 1),
    "PNS": (5, 1), "SRQ": (5, 0), "DAB": (5, 1), "ECP": (4, 0), "TLH": (5, 1),
    "VPS": (4, 0), "MLB": (5, 1), "GNV": (3, 0), "VRB": (3, 1), "EYW": (4, 1),
    "SFB": (4, 0), "PIE": (4, 0), "PGD": (2, 0),
}
MEDIUM = {
    "MCO": (18, 8), "MIA": (16, 6), "FLL": (16, 7), "TPA": (14, 6),
    "PBI": (8, 4), "RSW": (8, 2), "JAX": (8, 1),
    "PNS": (4, 0), "SRQ": (4, 0), "DAB": (4, 1), "ECP": (3, 0), "TLH": (4, 0),
    "VPS": (3, 0), "MLB": (4, 1), "GNV": (2, 0), "VRB": (2, 0), "EYW": (3, 1),
    "SFB": (3, 0), "PIE": (3, 0), "PGD": (2, 0),
}
LOW = {
    "MCO": (14, 6), "MIA": (16, 8), "FLL": (13, 6), "TPA": (12, 5),
    "PBI": (8, 3), "RSW": (8, 3), "JAX": (6, 1),
    "PNS": (8, 3), "SRQ": (3, 0), "DAB": (3, 0), "ECP": (3, 0), "TLH": (3, 0),
    "VPS": (4, 0), "MLB": (3, 0), "GNV": (2, 0), "VRB": (2, 0), "EYW": (3, 1),
    "SFB": (3, 0), "PIE": (2, 0), "PGD": (2, 0),
}

# (date, window start hour, profile)
WINDOWS = [
    ("2015-12-24", 7, LOW),
    ("2015-12-24", 12, HIGH),
    ("2015-12-24", 19, MEDIUM),
    ("2015-07-03", 12, HIGH),
    ("2015-11-25", 12, HIGH),
    ("2015-12-31", 12, HIGH),
    ("2015-02-17", 12, MEDIUM),
    ("2015-06-09", 12, LOW),
    ("2015-09-08", 12, LOW),
]


def main(out_path):
    rng = random.Random(20150101)
    rows = []

    def emit(date, origin, minute, delay, cancelled=0, diverted=0, dest=None):
        y, m, d = date.split("-")
        rows.append({
            "YEAR": y, "MONTH": int(m), "DAY": int(d),
            "AIRLINE": rng.choice(AIRLINES),
            "ORIGIN_AIRPORT": origin,
            "DESTINATION_AIRPORT": dest or rng.choice(DESTS),
            "SCHEDULED_DEPARTURE": f"{minute // 60:02d}{minute % 60:02d}",
            "DEPARTURE_DELAY": delay,
            "CANCELLED": cancelled, "DIVERTED": diverted,
        })

    for date, start_hour, profile in WINDOWS:
        start = start_hour * 60
        for airport in AIRPORTS:
            f, d = profile.get(airport, (0, 0))
            for i in range(f):
                minute = start + rng.randrange(120)
                delay = rng.randrange(20, 120) if i < d else rng.randrange(-5, 11)
                emit(date, airport, minute, delay)

    # traffic outside any analysis window
    for date in ("2015-12-24", "2015-07-03"):
        for airport in ("MCO", "MIA", "TPA"):
            for _ in range(4):
                emit(date, airport, 10 * 60 + rng.randrange(60), rng.randrange(-5, 30))

    # cancelled / diverted rows, dropped at parse time
    emit("2015-12-24", "MCO", 12 * 60 + 30, 0, cancelled=1)
    emit("2015-12-24", "MIA", 12 * 60 + 45, 0, diverted=1)
    # departures from outside the registry, counted as unknown origins
    emit("2015-12-24", "ATL", 12 * 60 + 15, 25)
    emit("2015-12-24", "ATL", 12 * 60 + 50, 5)

    rows.sort(key=lambda r: (r["YEAR"], r["MONTH"], r["DAY"],
                             r["SCHEDULED_DEPARTURE"], r["ORIGIN_AIRPORT"]))
    with open(out_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows to {out_path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/synthetic_flights.csv")
