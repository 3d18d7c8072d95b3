"""Recompute every aggregate from corpus.json and compare with the targets."""
import json
from collections import Counter, defaultdict
from pathlib import Path

import tables as T
from affil import FOREIGN_AUTHORS, TYPE_AUTHORS, HOME

corpus = json.loads((Path(__file__).resolve().parent.parent / "corpus.json").read_text())
arts = corpus["articles"]
problems = []


def check(label, got, want):
    if got != want:
        problems.append(f"{label}: got {got}, want {want}")


check("articles", dict(Counter(a["year"] for a in arts)), T.ARTICLES)
check("authorships", {y: sum(len(a["authors"]) for a in arts if a["year"] == y) for y in T.YEARS},
      T.AUTHORSHIPS)
papers = Counter(x["name"] for a in arts for x in a["authors"])
check("unique authors", len(papers), 1435)
lotka = Counter(papers.values())
want = dict(T.LOTKA_OBSERVED); want[3] -= 1; want[4] += 1
check("lotka", dict(lotka), want)
for y in T.YEARS:
    check(f"sizes {y}", dict(Counter(len(a["authors"]) for a in arts if a["year"] == y)), T.SIZES[y])


def klass(a):
    if len(a["authors"]) == 1:
        return 0
    countries = {x["country"] for x in a["authors"]}
    if len(countries) > 1:
        return 3
    if len({x["affiliation"] for x in a["authors"]}) == 1:
        return 1
    return 2


for y in T.YEARS:
    c = Counter(klass(a) for a in arts if a["year"] == y)
    check(f"classes {y}", tuple(c[i] for i in range(4)), T.CLASSES[y])
    f = sum(1 for a in arts if a["year"] == y for x in a["authors"] if x["country"] != HOME)
    check(f"foreign authorships {y}", f, T.FOREIGN_AUTHORSHIPS[y])

split = Counter()
pairs = Counter()
for a in arts:
    cs = {x["country"] for x in a["authors"]}
    split["home" if cs == {HOME} else "foreign" if HOME not in cs else "mixed"] += 1
    if len(cs) > 1:
        pairs[tuple(sorted(cs))] += 1
check("article split", dict(split), {"home": 511, "mixed": 28, "foreign": 41})
check("pairs", pairs[("Australia", "Malaysia")], 7)
check("pairs total", sum(pairs.values()), 32)

aff_type = {}
author_side = {}
for a in arts:
    for x in a["authors"]:
        if x["affiliation"]:
            aff_type[x["affiliation"]] = (x["affiliation_type"], x["country"] == HOME)
        author_side[x["name"]] = (x["affiliation_type"], x["country"] == HOME, x["country"])
check("affiliations", len(aff_type), 173)
for side, table in TYPE_AUTHORS.items():
    for t, n in table.items():
        got = sum(1 for v in author_side.values() if v[0] == t and v[1] == (side == "home"))
        check(f"authors {side} {t}", got, n)
by_country = Counter(v[2] for v in author_side.values() if not v[1])
check("foreign countries", dict(by_country), FOREIGN_AUTHORS)

kw = Counter(len(a["keywords"]) for a in arts)
check("keywords/article", dict(kw), T.KEYWORDS_PER_ARTICLE)
kwc = Counter(k.lower() for a in arts for k in a["keywords"])
check("diabetes", kwc["diabetes"], 28)
check("malaysia kw", kwc["malaysia"], 47)
tw = Counter(len(a["title"].split()) for a in arts)
check("title words", dict(tw), T.TITLE_WORDS)
check("originals", {y: sum(1 for a in arts if a["year"] == y and a["type"] == "original")
                    for y in T.YEARS}, T.ORIGINALS)
check("funded", {y: sum(1 for a in arts if a["year"] == y and a["type"] == "original"
                        and a["funders"]) for y in T.YEARS}, T.FUNDED)
fund = Counter(f for a in arts for f in a["funders"])
check("funders", len(fund), 27)
check("irpa", fund["Ministry of Sc and Tech (Top down, IRPA) Grant"], 13)

check("refs", {y: sum(len(a["references"]) for a in arts if a["year"] == y) for y in T.YEARS},
      T.REFERENCES)
buckets = Counter()
for a in arts:
    n = len(a["references"])
    for lo, hi in T.REFERENCE_BUCKETS:
        if (lo <= n <= hi) or (lo == 85 and 81 <= n <= 90):
            buckets[(lo, hi)] += 1
check("ref buckets", dict(buckets), T.REFERENCE_BUCKETS)
for i, y in enumerate(T.YEARS):
    fm = Counter(r["source_type"] for a in arts if a["year"] == y for r in a["references"])
    check(f"formats {y}", dict(fm), {k: v[i] for k, v in T.FORMATS.items()})
    sc = [sum(1 for r in a["references"] if r.get("journal_title") == T.JOURNAL)
          for a in arts if a["year"] == y]
    check(f"self {y}", (sum(sc), sum(1 for s in sc if s)),
          (T.SELF_CITATIONS[y], T.SELF_CITING_ARTICLES[y]))
mat = T.pub_year_matrix()
for y in T.YEARS:
    got = Counter()
    for a in arts:
        if a["year"] != y:
            continue
        for r in a["references"]:
            py = r["pub_year"]
            got["undated" if py is None else "old" if py < 1950 else py] += 1
    check(f"matrix {y}", dict(got), mat[y])
jf = Counter(r["journal_title"] for a in arts for r in a["references"]
             if r["source_type"] == "journal" and r["journal_title"] != T.JOURNAL)
top = jf.most_common(3)
check("top journals", [n for _, n in top], [144, 142, 139])
lang = Counter(r.get("language", "English") for a in arts for r in a["references"])
check("non-english", sum(v for k, v in lang.items() if k != "English"), 25)
check("chinese", lang["Chinese"], 8)
titles = {r["journal_title"] for a in arts for r in a["references"] if r.get("language")}
check("non-english titles", len(titles), 19)

rec = [(a["year"], r) for a in arts for r in a["received"]]
check("received total", len(rec), 1164)
check("cited articles", sum(1 for a in arts if a["received"]), 446)
for y, (n, per) in T.RECEIVED.items():
    check(f"received {y}", dict(Counter(r["citing_year"] for py, r in rec if py == y)), per)
check("doc types", dict(Counter(r["doc_type"] for _, r in rec)), T.CITING_DOC_TYPES)
single = Counter(r["citing_countries"][0] for _, r in rec if len(r["citing_countries"]) == 1)
check("china", single["China"], 227)
check("malaysia", single["Malaysia"], 171)
check("multi", sum(1 for _, r in rec if len(r["citing_countries"]) > 1), 90)
check("self received", sum(1 for _, r in rec if r["is_self"]), 17)


def a_count(target, lo, hi):
    return sum(1 for py, r in rec if lo <= py <= hi and r["citing_year"] == target)


check("IF 2006", a_count(2006, 2004, 2005), 110)
check("IF 2007", a_count(2007, 2005, 2006), 127)
check("IF 2008", a_count(2008, 2006, 2007), 75)
check("IF 2009", a_count(2009, 2007, 2008), 89)
check("IF 5y", a_count(2009, 2004, 2008), 335)

if problems:
    print("\n".join(problems))
    raise SystemExit(1)
print("all targets reproduced")
