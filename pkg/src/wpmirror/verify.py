"""Cross-verification of the two sides and the machine-checkable certificate.

A certificate for a weight pair records, for every ordered object pair, the
per-degree dimensions on both sides; the full multiplication tables of both
algebras as order-independent digests; the higher-product report; and the
resolution-oracle comparison.  The certificate passes only if every
component check passes, and flipping any single structure constant on
either side flips it to fail.
"""

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .aside import enumerate_accepted_words, higher_products_vanish, hom_space
from .bside import DualElement, compose_dual, dual_ext, verify_prop6_via_resolution
from .weights import Weights

TOOL_VERSION = "0.1.0"

CONVENTIONS = {
    "object_identification": "curve k on the A-side corresponds to the simple module at k",
    "weight_convention": "morphism weight = (target - source) + cohomological degree",
    "orientation_convention": "letter signs follow the curve flow from the upper to the lower end",
}


def _label_key(label):
    return list(label.subset)


def aside_digest(w):
    """Sorted nonzero two-fold product table of the Fukaya side, with every
    entry keyed by the triple and the three point labels.

    One exhaustive word enumeration covers all triples: every accepted
    triangle contributes exactly one structure constant +1.
    """
    entries = []
    for word in enumerate_accepted_words(w):
        if len(word.corners) != 3:
            continue
        p0, p1, out = word.corners
        entries.append((
            [p0.j, p0.k, p1.k],
            _label_key(p0.label),
            _label_key(p1.label),
            _label_key(out.label),
            1,
        ))
    entries.sort()
    return entries


def bside_digest(w):
    """Sorted nonzero truncated-wedge product table of the dual algebra,
    over the same index triples and labels."""
    entries = []
    for i in range(w.l - 1):
        for j in range(i + 1, w.l - 1):
            for k in range(j + 1, w.l - 1):
                for _, lab0 in dual_ext(w, j, i).basis:
                    for _, lab1 in dual_ext(w, k, j).basis:
                        prod = compose_dual(w, DualElement(j, i, lab0),
                                            DualElement(k, j, lab1))
                        if prod is not None and not prod.is_zero():
                            entries.append((
                                [i, j, k],
                                _label_key(lab0),
                                _label_key(lab1),
                                _label_key(prod.label),
                                int(prod.coefficient),
                            ))
    entries.sort()
    return entries


@dataclass
class Certificate:
    weights: tuple
    l: int
    dim_table: dict        # "j,k" -> {"aside": {...}, "bside": {...}}
    aside_digest: list
    bside_digest: list
    higher_products: dict
    resolution_check: dict
    conventions: dict
    passed: bool
    failures: list
    timestamp: str
    tool_version: str = TOOL_VERSION

    def to_json(self, include_timestamp=True):
        payload = {
            "weights": list(self.weights),
            "l": self.l,
            "dim_table": self.dim_table,
            "aside_digest": self.aside_digest,
            "bside_digest": self.bside_digest,
            "higher_products": self.higher_products,
            "resolution_check": self.resolution_check,
            "conventions": self.conventions,
            "passed": self.passed,
            "failures": self.failures,
            "tool_version": self.tool_version,
        }
        if include_timestamp:
            payload["timestamp"] = self.timestamp
        return json.dumps(payload, sort_keys=True, indent=2)

    def digest(self):
        """Content hash, excluding the timestamp."""
        return hashlib.sha256(
            self.to_json(include_timestamp=False).encode()).hexdigest()


def hms_certificate(w, max_word_len=8, corrupt=None):
    """Build the full certificate for one weight pair.

    `corrupt` is the mutation-testing hook: ("aside"|"bside", index) bumps
    one structure constant of the chosen digest before comparison.
    """
    if not isinstance(w, Weights):
        w = Weights(w)
    failures = []

    dim_table = {}
    for j in range(w.l - 1):
        for k in range(j, w.l - 1):
            da = hom_space(w, j, k).dims_by_degree
            db = dual_ext(w, k, j).dims_by_degree
            dim_table[f"{j},{k}"] = {
                "aside": {str(d): v for d, v in sorted(da.items())},
                "bside": {str(d): v for d, v in sorted(db.items())},
            }
            if da != db:
                failures.append(f"dimension mismatch at pair ({j},{k}): {da} vs {db}")
            labels_a = sorted(_label_key(lab) for _, lab in hom_space(w, j, k).basis)
            labels_b = sorted(_label_key(lab) for _, lab in dual_ext(w, k, j).basis)
            if labels_a != labels_b:
                failures.append(f"label mismatch at pair ({j},{k})")

    dig_a = aside_digest(w)
    dig_b = bside_digest(w)
    if corrupt is not None:
        side, idx = corrupt
        target = dig_a if side == "aside" else dig_b
        if target:
            entry = list(target[idx % len(target)])
            entry[4] += 1
            target[idx % len(target)] = tuple(entry)
    if [list(e) for e in dig_a] != [list(e) for e in dig_b]:
        failures.append("composition digests differ")

    hp = higher_products_vanish(w, max_word_len)
    higher = {
        "ok": hp.ok,
        "max_word_len": hp.max_word_len,
        "accepted_count": hp.accepted_count,
        "counts_by_length": {str(k): v for k, v in sorted(hp.counts_by_length.items())},
    }
    if not hp.ok:
        failures.append("higher products do not vanish: "
                        + "; ".join(str(x) for x in hp.offenders[:3]))

    res_ok = True
    for k in range(w.l - 1):
        for i in range(w.l - 1):
            oracle = verify_prop6_via_resolution(w, k, i)
            direct = dual_ext(w, k, i)
            if oracle.basis != direct.basis:
                res_ok = False
                failures.append(f"resolution oracle disagrees at (k={k}, i={i})")
    resolution_check = {"ok": res_ok}

    return Certificate(
        weights=tuple(w.a),
        l=w.l,
        dim_table=dim_table,
        aside_digest=[list(e[:4]) + [e[4]] for e in dig_a],
        bside_digest=[list(e[:4]) + [e[4]] for e in dig_b],
        higher_products=higher,
        resolution_check=resolution_check,
        conventions=dict(CONVENTIONS),
        passed=not failures,
        failures=failures,
        timestamp=datetime.now(timezone.utc).isoformat(),
    )


@dataclass
class SweepSummary:
    l_max: int
    results: list = field(default_factory=list)  # (weights, l, passed)

    @property
    def all_passed(self):
        return all(p for _, _, p in self.results)

    def to_csv(self):
        lines = ["weights,l,passed"]
        for weights, l, passed in self.results:
            lines.append(f"{'|'.join(map(str, weights))},{l},{passed}")
        return "\n".join(lines) + "\n"


def sweep(l_max, max_word_len=8):
    """One certificate per weight pair with a0 <= a1 and a0 + a1 <= l_max;
    deterministic order, order-insensitive summary."""
    if l_max < 2:
        raise ValueError("the sweep bound must be at least 2")
    summary = SweepSummary(l_max=l_max)
    for a0 in range(1, l_max):
        for a1 in range(a0, l_max - a0 + 1):
            cert = hms_certificate(Weights((a0, a1)), max_word_len=max_word_len)
            summary.results.append((cert.weights, cert.l, cert.passed))
    summary.results.sort()
    return summary
