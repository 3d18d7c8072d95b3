import csv, re
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "source"

RULES = [
    ("international_org", r"\bwho\b"),
    ("clinic", r"klinik|clinic"),
    ("private_org", r"\bsdn\b|berhad|\bbhd\b|\bfarm\b|\bgroup\b|palm oil|sirim"),
    ("medical_center", r"medical cent|specialist cent|complex|fertility|institut jantung|diabetes institute"),
    ("higher_institution", r"universit|college|school|campus"),
    ("hospital", r"hospital|rumah sakit|pavilion"),
]

OVERRIDES = {
    "Hospital Universiti Kebangsaan": "higher_institution",
    "Hospital Universiti Sains": "hospital",
    "Hospital University of Malaya": "hospital",
    "Tengku Ampuan Afzan": "hospital",
    "King Khalid University Hospital": "hospital",
    "Westmead Hospital": "government_agency",
    "University of Malaya Medical Centre": "hospital",
    "University kerbangsan malaysia medical center": "hospital",
    "Institut Jantung Negara": "government_agency",
    "Public Specialist Centre, Penang": "government_agency",
    "National Diabetes Institute": "higher_institution",
    "Institute of Paediatrics": "higher_institution",
    "IMU Clinical School": "higher_institution",
    "Community Residency Programme Kuala Kangsar Group": "higher_institution",
    "Hyderabad Medical Complex, Pakistan": "government_agency",
    "University Medical Centre Groningen": "higher_institution",
    "Sheffield Fertility Centre, United Kingdom.": "government_agency",
    "Haydarpasa Numune Education and Research Hospital, Turkey.": "government_agency",
}


def classify(name):
    low = name.lower()
    for key, t in OVERRIDES.items():
        if low.startswith(key.lower()):
            return t
    for t, pat in RULES:
        if re.search(pat, low):
            return t
    return "government_agency"


def load_affiliations():
    rows = []
    with open(SRC / "affiliations.tsv", encoding="utf-8") as f:
        for r in csv.DictReader(f, delimiter="\t"):
            rows.append({"name": r["affiliation"], "authors": int(r["authors"]),
                         "country": r["country"], "type": classify(r["affiliation"])})
    return rows


if __name__ == "__main__":
    from collections import Counter
    rows = load_affiliations()
    ca, cn = Counter(), Counter()
    for r in rows:
        side = "home" if r["country"] == "Malaysia" else "foreign"
        ca[(side, r["type"])] += 1
        cn[(side, r["type"])] += r["authors"]
    for k in sorted(ca):
        print(k, ca[k], cn[k])


HOME = "Malaysia"

# unique authors per type, split home/foreign (anonymous author excluded)
TYPE_AUTHORS = {
    "home": {"hospital": 363, "higher_institution": 748, "government_agency": 95,
             "medical_center": 18, "clinic": 16, "private_org": 15, "international_org": 0},
    "foreign": {"hospital": 38, "higher_institution": 126, "government_agency": 9,
                "medical_center": 4, "clinic": 0, "private_org": 0, "international_org": 2},
}

FOREIGN_AUTHORS = {
    "Singapore": 23, "Indonesia": 13, "India": 31, "Pakistan": 1, "Netherlands": 14,
    "UK": 11, "France": 3, "Ireland": 2, "Turkey": 25, "Iran": 13, "Saudi Arabia": 3,
    "Yemen": 2, "Japan": 15, "Australia": 14, "USA": 8, "Canada": 1,
}


def fit_author_counts(rows):
    """Adjust per-affiliation author counts to hit the type and country totals."""
    import numpy as np
    from scipy.optimize import milp, LinearConstraint, Bounds

    n = len(rows)
    # variables: x_i, then two tiers of up/down deviation so changes spread out
    nv = 5 * n
    cost = np.zeros(nv)
    for i, r in enumerate(rows):
        w = 1.0 if r["authors"] <= 2 else 20.0
        cost[n + i] = cost[2 * n + i] = w
        cost[3 * n + i] = cost[4 * n + i] = 25.0 * w
    A, lo, hi = [], [], []

    def add(coeffs, l, h):
        row = np.zeros(nv)
        for j, c in coeffs:
            row[j] = c
        A.append(row); lo.append(l); hi.append(h)

    for i, r in enumerate(rows):
        add([(i, 1), (n + i, -1), (2 * n + i, 1), (3 * n + i, -1), (4 * n + i, 1)],
            r["authors"], r["authors"])
    for side, table in TYPE_AUTHORS.items():
        for t, total in table.items():
            idx = [i for i, r in enumerate(rows)
                   if r["type"] == t and (r["country"] == HOME) == (side == "home")]
            if idx:
                add([(i, 1) for i in idx], total, total)
    for c, total in FOREIGN_AUTHORS.items():
        add([(i, 1) for i, r in enumerate(rows) if r["country"] == c], total, total)
    lb = np.zeros(nv); ub = np.full(nv, np.inf)
    lb[:n] = 1
    ub[n:3 * n] = 1
    res = milp(cost, constraints=LinearConstraint(np.array(A), lo, hi),
               integrality=np.ones(nv), bounds=Bounds(lb, ub))
    if not res.success:
        raise SystemExit("author-count fit infeasible: " + res.message)
    out = []
    for i, r in enumerate(rows):
        out.append(dict(r, authors=int(round(res.x[i]))))
    return out
