#!/usr/bin/env python3
# Copyright 2026 The ontoaudit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the repository-survey fixtures under tests/fixtures.

Outputs:
  results/bioportal.jsonl  266 audit result lines for the BioPortal survey
  results/lov.jsonl        521 audit result lines for the LOV survey
  replay/bioportal/        recorded API exchanges (981 listed ontologies)
  replay/lov/              recorded API exchanges (773 listed vocabularies)
  ontologies/dcat_fdc_like.ttl  39 entities labelled with the DCAT-FDC counts

The result lines carry published per-ontology counts; the replay bodies are
small stand-ins that only need to parse. Output is deterministic.
"""

import json
import math
import os
import random
import statistics

HERE = os.path.dirname(os.path.abspath(__file__))
SEED = 20260101

# Cov and per-language LCom (percent, one decimal) for the multilingual
# BioPortal ontologies.
BIOPORTAL_MULTILINGUAL = [
    ("ATOL", 2352, {"en": 100, "fr": 100}),
    ("CIDOC-CRM", 372, {"de": 92.5, "el": 87.4, "en": 99.7, "fr": 87.4,
                        "pt": 87.4, "pt-br": 87.1, "ru": 90.9}),
    ("CL", 16846, {"en": 1.3, "zh": 0.1}),
    ("COVIDCRFRAPID", 407, {"en": 78.9, "pt-br": 53.8}),
    ("DCAT-FDC", 39, {"ar": 41.0, "cs": 89.7, "da": 92.3, "el": 41.0,
                      "en": 94.9, "es": 89.7, "fr": 41.0, "it": 94.9,
                      "ja": 41.0}),
    ("EUPATH", 4184, {"en": 15.5, "fr": 0.02, "pt": 0.1}),
    ("LABO", 204, {"en": 90.7, "fr": 10.3}),
    ("MOSAIC", 282, {"en": 37.9, "es": 3.2}),
    ("NANDO", 2733, {"en": 100, "ja": 100}),
    ("OBI", 4733, {"en": 25.7, "zh": 0.1}),
    ("OBIB", 1949, {"en": 32.1, "zh": 0.2}),
    ("OCMR", 3471, {"en": 5.0, "zh": 1.3}),
    ("OM", 833, {"en": 33.9, "ja": 2.0}),
    ("ONTOLURGENCES", 10092, {"en": 28.2, "fr": 99.0}),
    ("PDRO", 239, {"en": 74.1, "fr": 62.3}),
    ("RADLEX", 46813, {"de": 46.3, "en": 46.5}),
    ("SEQ", 5, {"en": 80, "it": 80}),
    ("VDOT", 208, {"de": 37.0, "en": 29.8}),
]

LOV_LANGUAGE_COUNTS_AT_5 = {
    "af": 5, "ar": 2, "ca": 1, "zh": 1, "cs": 5, "da": 3, "nl": 9, "en": 74,
    "et": 1, "fa": 1, "fi": 2, "fr": 27, "de": 19, "el": 1, "it": 31,
    "ja": 2, "ko": 3, "pt": 8, "ro": 5, "ru": 6, "sk": 1, "es": 20, "sv": 6,
    "tr": 1,
}


def round_half_up(x, digits):
  q = 10 ** digits
  return math.floor(x * q + 0.5 + 1e-9) / q


def shown(labeled, cov):
  """Displayed percentage: one decimal, two when one decimal would show 0.0."""
  lcom = 100.0 * labeled / cov
  one = round_half_up(lcom, 1)
  if one == 0.0 and lcom > 0:
    return round_half_up(lcom, 2)
  return one


def labeled_for(cov, percent):
  n = round(percent * cov / 100.0)
  assert shown(n, cov) == percent, (cov, percent, n, shown(n, cov))
  return n


def result_line(dataset, oid, cov, labeled):
  per_language = {t: 100.0 * n / cov for t, n in sorted(labeled.items())}
  nonzero = {t: n for t, n in labeled.items() if n > 0}
  top = max(nonzero.values()) if nonzero else 0
  primary = sorted(t for t, n in nonzero.items() if n == top)
  return {
      "ontology_id": oid,
      "dataset": dataset,
      "source": "",
      "profile": {
          "cov": cov,
          "degenerate": cov == 0,
          "per_language": per_language,
          "labeled_entities": dict(sorted(labeled.items())),
      },
      "primary_languages": primary,
      "other_languages": sorted(t for t in nonzero if t not in primary),
      "approach": {"family": "labels" if nonzero else "none",
                   "variant": "undetermined",
                   "needs_human_review": True},
  }


def monolingual(rng, dataset, prefix, count, id_width):
  rows = []
  others = ["fr", "de", "es", "it", "pt", "nl", "ja"]
  for i in range(count):
    oid = "%s%0*d" % (prefix, id_width, i + 1)
    kind = i % 20
    if kind == 0:
      cov = rng.randint(1, 400)
      labeled = {}
    elif kind == 1 and dataset == "lov" and i < 60:
      cov = 0
      labeled = {}
    else:
      cov = rng.randint(3, 6000 if dataset == "bioportal" else 400)
      tag = others[i % len(others)] if kind == 7 else "en"
      labeled = {tag: rng.randint(1, cov)}
    row = result_line(dataset, oid, cov, labeled) if cov else {
        "ontology_id": oid, "dataset": dataset, "source": "",
        "profile": {"cov": 0, "degenerate": True, "per_language": {},
                    "labeled_entities": {}},
        "primary_languages": [], "other_languages": [],
        "approach": {"family": "none", "variant": "undetermined",
                     "needs_human_review": True}}
    rows.append(row)
  return rows


def bioportal_results(rng):
  rows = []
  for oid, cov, table in BIOPORTAL_MULTILINGUAL:
    labeled = {t: labeled_for(cov, p) for t, p in table.items()}
    rows.append(result_line("bioportal", oid, cov, labeled))
  rows += monolingual(rng, "bioportal", "BPSYN-", 248, 4)
  assert len(rows) == 266
  covs = [cov for _, cov, _ in BIOPORTAL_MULTILINGUAL]
  assert sum(covs) == 95762 and statistics.median(covs) == 1391
  kept = [cov for _, cov, t in BIOPORTAL_MULTILINGUAL
          if sum(1 for p in t.values() if p > 5) >= 2]
  assert len(kept) == 11 and sum(kept) == 63464
  assert statistics.median(kept) == 372
  return rows


def lov_design(rng):
  """Returns [(id, cov, {tag: labeled})] for the 82 multilingual vocabs."""
  remaining = dict(LOV_LANGUAGE_COUNTS_AT_5)
  remaining["en"] = 0
  all_tags = sorted(LOV_LANGUAGE_COUNTS_AT_5)

  def take(size):
    pool = sorted((t for t in remaining if remaining[t] > 0),
                  key=lambda t: (-remaining[t], t))
    chosen = pool[:size]
    assert len(chosen) == size
    for t in chosen:
      remaining[t] -= 1
    return ["en"] + sorted(chosen)

  # Language sets above 5%, largest first so the greedy pick stays feasible.
  sets = [("bto", take(15))]
  sets += [("mlv-eleven-%d" % k, take(10)) for k in range(5)]
  sets.append(("lingvo", take(5)))
  sets.append(("mlv-six", take(5)))
  sets.append(("mlv-eight", take(7)))
  sets += [("mlv-five-%d" % k, take(4)) for k in range(2)]
  sets += [("mlv-four-%d" % k, take(3)) for k in range(2)]
  sets.append(("mil", take(2)))
  sets += [("mlv-three-%d" % k, take(2)) for k in range(2)]
  pairs = []
  for t in sorted(remaining):
    pairs += [t] * remaining[t]
  assert len(pairs) == 58, len(pairs)
  special = {"ti": pairs[0], "km4c": pairs[1], "mlv-shrinks": pairs[2]}
  for name, tag in special.items():
    sets.append((name, ["en", tag]))
  for k, tag in enumerate(pairs[3:]):
    sets.append(("mlv-%03d" % k, ["en", tag]))
  assert len(sets) == 74

  # Cov values for the 74 that stay multilingual above 5%.
  low = [4] + [5 + round(i * 57 / 34) for i in range(35)]
  mid = [63, 63, 64, 65, 66, 66]
  high_target = 9203 - sum(low) - sum(mid) - 1033
  high = [67 + int((i / 30) ** 2 * 700) for i in range(31)]
  diff = high_target - sum(high)
  i = len(high) - 1
  while diff != 0:
    if diff > 0:
      room = 1032 - high[i]
      add = min(room, diff)
      high[i] += add
      diff -= add
    else:
      room = high[i] - 67
      sub = min(room, -diff)
      high[i] -= sub
      diff += sub
    i = (i - 1) % len(high)
  high.sort()
  covs = sorted(low + mid + high + [1033])
  assert len(covs) == 74 and sum(covs) == 9203
  assert covs[36] == covs[37] == 63 and covs[40] == covs[41] == 66
  assert statistics.median(covs) == 63

  needs_room = {"lingvo", "mil", "mlv-shrinks"}
  by_name = {}
  pool = list(covs)
  pool.remove(4)
  pool.remove(1033)
  by_name["ti"] = 4
  by_name["km4c"] = 1033
  big = [c for c in pool if c >= 200]
  for name in sorted(needs_room):
    c = big[len(big) // 2 - len(by_name)]
    pool.remove(c)
    big.remove(c)
    by_name[name] = c
  rng.shuffle(pool)
  for name, _ in sets:
    if name not in by_name:
      by_name[name] = pool.pop()
  assert not pool

  design = []
  for name, tags in sets:
    cov = by_name[name]
    labeled = {}
    for t in tags:
      floor = cov // 20 + 1  # smallest count above 5%
      labeled[t] = cov if t == "en" else rng.randint(min(floor, cov), cov)
    extra = {"lingvo": 10, "mil": 13, "mlv-shrinks": 1}.get(name, 0)
    spare = [t for t in all_tags if t not in tags]
    for t in spare[:extra]:
      labeled[t] = 1
    design.append((name, cov, labeled))

  # Vocabularies that only count as multilingual with every label included.
  dropouts = [("obo", 4731, {"en": 1216, "zh": 5})]
  for k, cov in enumerate([100, 100, 100, 100, 100, 105, 105]):
    dropouts.append(("mlv-drop-%d" % k, cov,
                     {"en": cov - k, all_tags[k]: 1 + k % 5}))
  design += dropouts
  check_lov(design)
  return design


def check_lov(design):
  def langs(labeled, cov, threshold):
    return [t for t, n in labeled.items() if 100.0 * n / cov > threshold]

  at0 = [(n, c, l) for n, c, l in design if len(langs(l, c, 0)) >= 2]
  at5 = [(n, c, l) for n, c, l in design if len(langs(l, c, 5)) >= 2]
  assert len(at0) == 82 and len(at5) == 74
  assert sum(c for _, c, _ in at0) == 14644
  assert sum(c for _, c, _ in at5) == 9203
  assert statistics.median(c for _, c, _ in at0) == 66
  assert statistics.median(c for _, c, _ in at5) == 63

  def histogram(rows, threshold):
    h = {}
    for _, c, l in rows:
      k = len(langs(l, c, threshold))
      h[k] = h.get(k, 0) + 1
    return h

  assert histogram(at0, 0) == {2: 65, 3: 3, 4: 2, 5: 2, 6: 1, 8: 1, 11: 5,
                               16: 3}, histogram(at0, 0)
  assert histogram(at5, 5) == {2: 58, 3: 3, 4: 2, 5: 2, 6: 2, 8: 1, 11: 5,
                               16: 1}, histogram(at5, 5)
  per = {}
  for _, c, l in at5:
    for t in langs(l, c, 5):
      per[t] = per.get(t, 0) + 1
  assert per == LOV_LANGUAGE_COUNTS_AT_5, per
  named = {n: (c, l) for n, c, l in design}
  assert min(c for _, c, _ in at0) == named["ti"][0] == 4
  assert max(c for _, c, _ in at0) == named["obo"][0] == 4731
  assert max(c for _, c, _ in at5) == named["km4c"][0] == 1033
  assert len(langs(named["lingvo"][1], named["lingvo"][0], 5)) == 6
  assert len(langs(named["mil"][1], named["mil"][0], 5)) == 3


def lov_results(rng):
  rows = [result_line("lov", n, c, l) for n, c, l in lov_design(rng)]
  rows += monolingual(rng, "lov", "voc", 439, 4)
  assert len(rows) == 521
  return rows


def write_jsonl(path, rows):
  os.makedirs(os.path.dirname(path), exist_ok=True)
  with open(path, "w", encoding="utf-8", newline="\n") as f:
    for row in rows:
      f.write(json.dumps(row, ensure_ascii=False, separators=(",", ":")))
      f.write("\n")


RECORDED_AT = "2024-05-02T10:00:00Z"


def exchange(url, status, body="", content_type=None, error=None,
             headers=None):
  out = {"url": url, "status": status, "recorded_at": RECORDED_AT}
  hdrs = dict(headers or {})
  if content_type:
    hdrs["Content-Type"] = content_type
  if hdrs:
    out["headers"] = hdrs
  if body:
    out["body"] = body
  if error:
    out["error"] = error
  return out


def tiny_rdfxml(iri):
  return ('<?xml version="1.0"?>\n'
          '<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"\n'
          '         xmlns:owl="http://www.w3.org/2002/07/owl#">\n'
          '  <owl:Ontology rdf:about="%s"/>\n'
          '  <owl:Class rdf:about="%s#Thing1"/>\n'
          '</rdf:RDF>\n' % (iri, iri))


def tiny_turtle(iri):
  return ('@prefix owl: <http://www.w3.org/2002/07/owl#> .\n'
          '@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n'
          '<%s> a owl:Ontology .\n'
          '<%s#Term> a owl:Class ; rdfs:label "term"@en .\n' % (iri, iri))


def bioportal_replay(rng, survivors):
  base = "https://data.bioontology.org"
  ids = list(survivors)
  empty = ["BPEMPTY-1", "BPEMPTY-2"]
  nonprod = ["BPDEV-%03d" % i for i in range(462)]
  other = ["BPOTHER-%03d" % i for i in range(251)]
  everything = ids + empty + nonprod + other
  rng.shuffle(everything)
  assert len(everything) == 981

  listing = []
  for oid in everything:
    listing.append({
        "acronym": oid,
        "name": "Ontology " + oid,
        "@id": base + "/ontologies/" + oid,
        "links": {"download": base + "/ontologies/" + oid + "/download"},
    })
  ex = [exchange(base + "/ontologies", 200, json.dumps(listing),
                 "application/json"),
        exchange(base + "/categories", 200,
                 json.dumps([{"acronym": "ANAT", "name": "Anatomy"},
                             {"acronym": "HEALTH", "name": "Health"}]),
                 "application/json")]
  statuses = ["alpha", "beta", "retired", "", "production_candidate"]
  formats = ["UMLS", "SKOS", "OBO"]
  for k, oid in enumerate(everything):
    sub_url = base + "/ontologies/" + oid + "/latest_submission"
    if oid in other and k % 50 == 0:
      ex.append(exchange(sub_url, 404, '{"errors":["not found"]}',
                         "application/json"))
    else:
      fmt = "OWL" if oid not in other else formats[k % 3]
      if oid in nonprod:
        status = statuses[k % len(statuses)]
      elif oid in other:
        status = "production" if k % 2 else "beta"
      else:
        status = "production"
      if k == 7:
        ex.append(exchange(sub_url, 429, "", headers={"Retry-After": "0"}))
      ex.append(exchange(sub_url, 200, json.dumps(
          {"hasOntologyLanguage": fmt, "status": status,
           "version": "1.%d" % (k % 9)}), "application/json"))
    ex.append(exchange(base + "/ontologies/" + oid + "/categories", 200,
                       json.dumps([{"acronym": "HEALTH"}] if k % 3 else []),
                       "application/json"))
  for oid in ids:
    ex.append(exchange(base + "/ontologies/" + oid + "/download", 200,
                       tiny_rdfxml("http://purl.example.org/" + oid.lower()),
                       "application/rdf+xml"))
  for oid in empty:
    ex.append(exchange(base + "/ontologies/" + oid + "/download", 200, "",
                       "application/rdf+xml"))
  return ex


def lov_replay(rng, survivors):
  base = "https://lov.linkeddata.es/dataset/lov"
  ids = list(survivors)
  rng.shuffle(ids)
  fallback = set(ids[:103])
  namespace_only = ["schema", "nsonly"]
  code0 = ["gone%02d" % i for i in range(75)]
  moved = ["moved%02d" % i for i in range(23)]
  missing = ["missing%03d" % i for i in range(125)]
  broken = ["broken%02d" % i for i in range(27)]
  everything = sorted(ids + namespace_only + code0 + moved + missing + broken)
  assert len(everything) == 773

  def uri_of(prefix):
    return "http://host%d.example.org/vocab/%s" % (
        sum(map(ord, prefix)) % 40, prefix)

  listing = [{"prefix": p, "uri": uri_of(p), "nsp": uri_of(p) + "#",
              "titles": [{"value": "Vocabulary " + p, "lang": "en"}]}
             for p in everything]
  ex = [exchange(base + "/api/v2/vocabulary/list", 200, json.dumps(listing),
                 "application/json")]
  for k, p in enumerate(everything):
    uri = uri_of(p)
    if p in fallback:
      ex.append(exchange(uri, 200,
                         "<!DOCTYPE html><html><body>%s</body></html>" % p,
                         "text/html; charset=utf-8"))
      file_url = base + "/vocabs/%s/versions/%s-2020-01-01.n3" % (p, p)
      info = {"prefix": p, "versions": [
          {"issued": "2018-03-01", "fileURL":
           base + "/vocabs/%s/versions/%s-2018-03-01.n3" % (p, p)},
          {"issued": "2020-01-01", "fileURL": file_url}]}
      ex.append(exchange(base + "/api/v2/vocabulary/info?vocab=" + p, 200,
                         json.dumps(info), "application/json"))
      ex.append(exchange(file_url, 200, tiny_turtle(uri), "text/plain"))
    elif p in ids:
      if k % 3 == 0:
        ex.append(exchange(uri, 200, tiny_turtle(uri), "text/turtle"))
      else:
        ex.append(exchange(uri, 200, tiny_rdfxml(uri), "application/rdf+xml"))
    elif p in namespace_only:
      ex.append(exchange(uri, 200,
                         "@prefix %s: <%s#> .\n" % (p, uri), "text/turtle"))
    elif p in code0:
      ex.append(exchange(uri, 0, error=["dns", "timeout", "connect"][k % 3]))
    elif p in moved:
      target = uri + ".rdf"
      ex.append(exchange(uri, 303, "", headers={"Location": target}))
      ex.append(exchange(target, 200, tiny_rdfxml(uri),
                         "application/rdf+xml"))
    elif p in missing:
      ex.append(exchange(uri, [404, 410, 406, 403][k % 4], "not here",
                         "text/plain"))
    else:
      ex.append(exchange(uri, [500, 502, 503][k % 3], "", "text/plain"))
  return ex


def dcat_fdc_like():
  """Turtle with 25 classes, 10 object and 4 data properties."""
  cov = 39
  table = dict(BIOPORTAL_MULTILINGUAL[4][2])
  counts = {t: labeled_for(cov, p) for t, p in table.items()}
  entities = (["Class%02d" % i for i in range(25)] +
              ["objectProperty%02d" % i for i in range(10)] +
              ["dataProperty%02d" % i for i in range(4)])
  kinds = ["owl:Class"] * 25 + ["owl:ObjectProperty"] * 10 + \
      ["owl:DatatypeProperty"] * 4
  lines = ["@prefix : <http://example.org/dcat-fdc-like#> .",
           "@prefix owl: <http://www.w3.org/2002/07/owl#> .",
           "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .",
           "",
           "<http://example.org/dcat-fdc-like> a owl:Ontology .",
           ""]
  for i, (name, kind) in enumerate(zip(entities, kinds)):
    labels = ['"%s %s"@%s' % (name, t, t) for t in sorted(counts)
              if i < counts[t]]
    lines.append(":%s a %s%s ." % (
        name, kind, (" ;\n  rdfs:label " + " ,\n    ".join(labels))
        if labels else ""))
  return "\n".join(lines) + "\n"


def main():
  rng = random.Random(SEED)
  bio = bioportal_results(rng)
  lov = lov_results(rng)
  write_jsonl(os.path.join(HERE, "results", "bioportal.jsonl"), bio)
  write_jsonl(os.path.join(HERE, "results", "lov.jsonl"), lov)
  write_jsonl(os.path.join(HERE, "replay", "bioportal", "exchanges.jsonl"),
              bioportal_replay(rng, [r["ontology_id"] for r in bio]))
  write_jsonl(os.path.join(HERE, "replay", "lov", "exchanges.jsonl"),
              lov_replay(rng, [r["ontology_id"] for r in lov]))
  with open(os.path.join(HERE, "ontologies", "dcat_fdc_like.ttl"), "w",
            encoding="utf-8", newline="\n") as f:
    f.write(dcat_fdc_like())


if __name__ == "__main__":
  main()
