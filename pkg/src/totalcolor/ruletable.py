"""Configurable local discharging rules.

The per-shape transfer rules are data, not code: a rule names a sender
pattern, a receiver pattern, and an exact amount from the menu
{1/6, 1/3, 1/2, 2/3}.  The shipped default table transcribes every
vertex-to-vertex transfer amount stated in the case analysis; users may
load replacement tables from JSON.

Receiver patterns center on the *anchored face view*: going around the
receiver's rotation, corner i is the face wedged between its darts i-1 and
i, and the edge at dart i is flanked by corners i and i+1.  A rule's
`faces` list is matched cyclically starting just after the connecting edge
(so the first and last tokens flank that edge), in either orientation.

Face tokens: an int is an exact size, "k+" a lower bound, and a dict may
pin `size` (int or "k+"), `new_edge` (boundary contains a new edge),
`min_bigs`/`max_bigs` (big-vertex occurrences on the boundary), and
`min_share` (the face's redistribution share is at least this fraction).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .augment import AugmentedGraph
from .embedding import CROSSING, TRUE, dart_face_index, seg_key

AMOUNT_MENU = (Fraction(1, 6), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))


class RuleError(ValueError):
    """Malformed rule table, or two rules firing on one ordered pair."""


@dataclass(frozen=True)
class FaceToken:
    size: int | None = None
    min_size: int | None = None
    new_edge: bool | None = None
    min_bigs: int | None = None
    max_bigs: int | None = None
    min_share: Fraction | None = None

    def matches(self, ctx: "MatchContext", fi: int) -> bool:
        if self.size is not None and ctx.face_size[fi] != self.size:
            return False
        if self.min_size is not None and ctx.face_size[fi] < self.min_size:
            return False
        if self.new_edge is not None and ctx.face_new[fi] != self.new_edge:
            return False
        if self.min_bigs is not None and ctx.face_bigs[fi] < self.min_bigs:
            return False
        if self.max_bigs is not None and ctx.face_bigs[fi] > self.max_bigs:
            return False
        if self.min_share is not None:
            share = ctx.face_share(fi)
            if share is not None and share < self.min_share:
                return False
        return True


@dataclass(frozen=True)
class EndPattern:
    kind: str | None = None
    d1: int | None = None
    d2: int | None = None
    size_class: str | None = None
    new_incident: bool | None = None
    min_degree: object = None  # int or "delta"/"delta-1"/"delta-2"
    via_new_edge: bool | None = None
    num_crossing_neighbors: int | None = None
    opposite_end_small: bool | None = None
    faces: tuple | None = None  # tuple[FaceToken], anchored at the connecting edge


@dataclass(frozen=True)
class LocalRule:
    id: str
    sender: EndPattern
    receiver: EndPattern
    amount: Fraction


@dataclass
class RuleTable:
    rules: list = field(default_factory=list)
    exclusions: tuple = ()


class MatchContext:
    """Precomputed per-G* data shared by all pattern evaluations."""

    def __init__(self, a: AugmentedGraph):
        self.a = a
        star = a.star
        self.star = star
        self.faces = star.faces()
        self.dart_face = dart_face_index(self.faces)
        self.face_size = [f.size for f in self.faces]
        self.face_new = [
            any(star.segment_origin[seg_key(d, star.twin)] is None for d in f.boundary)
            for f in self.faces
        ]
        self.face_bigs = []
        self.face_smalls = []
        for f in self.faces:
            bigs = sum(
                1
                for d in f.boundary
                if a.classification[star.owner[d]].size_class == "big"
            )
            self.face_bigs.append(bigs)
            self.face_smalls.append(f.size - bigs)
        # corner i at v = face between rotation darts i-1 and i
        self.corner = {
            v: [self.dart_face[d] for d in star.rotation[v]] for v in star.rotation
        }
        self.crossing_nbrs = {
            v: sum(
                1 for d in star.rotation[v] if star.vertex_kind[star.other_end(d)] == CROSSING
            )
            for v in star.rotation
        }

    def face_share(self, fi: int) -> Fraction | None:
        """Per-small-occurrence redistribution share; None when the face has
        no small occurrences (nothing to receive, so every bound holds)."""
        smalls = self.face_smalls[fi]
        if smalls == 0:
            return None
        return Fraction(2 * self.face_size[fi] - 6, smalls)


def resolve_threshold(value, delta: int) -> int:
    if isinstance(value, int):
        return value
    offsets = {"delta": 0, "delta-1": 1, "delta-2": 2}
    if value not in offsets:
        raise RuleError(f"bad degree threshold {value!r}")
    return delta - offsets[value]


def _end_degree(c) -> int:
    # degree thresholds refer to the original graph for true vertices
    return c.d1 if c.kind == TRUE else c.d2


def sender_matches(p: EndPattern, ctx: MatchContext, s, r_dart: int, delta: int) -> bool:
    c = ctx.a.classification[s]
    if p.kind is not None and c.kind != p.kind:
        return False
    if p.d1 is not None and c.d1 != p.d1:
        return False
    if p.d2 is not None and c.d2 != p.d2:
        return False
    if p.size_class is not None and c.size_class != p.size_class:
        return False
    if p.new_incident is not None and c.new_incident != p.new_incident:
        return False
    if p.min_degree is not None and _end_degree(c) < resolve_threshold(p.min_degree, delta):
        return False
    if p.via_new_edge is not None:
        is_new = ctx.star.segment_origin[seg_key(r_dart, ctx.star.twin)] is None
        if is_new != p.via_new_edge:
            return False
    return True


def receiver_matches(p: EndPattern, ctx: MatchContext, r, r_dart: int) -> bool:
    c = ctx.a.classification[r]
    if p.kind is not None and c.kind != p.kind:
        return False
    if p.d1 is not None and c.d1 != p.d1:
        return False
    if p.d2 is not None and c.d2 != p.d2:
        return False
    if p.size_class is not None and c.size_class != p.size_class:
        return False
    if p.new_incident is not None and c.new_incident != p.new_incident:
        return False
    if p.num_crossing_neighbors is not None and ctx.crossing_nbrs[r] != p.num_crossing_neighbors:
        return False
    rot = ctx.star.rotation[r]
    k = len(rot)
    i = rot.index(r_dart)
    if p.opposite_end_small is not None:
        if c.kind != CROSSING:
            return False
        w = ctx.star.other_end(rot[(i + 2) % 4])
        small = ctx.a.classification[w].size_class == "small"
        if small != p.opposite_end_small:
            return False
    if p.faces is not None:
        if len(p.faces) != k:
            return False
        cf = ctx.corner[r]
        forward = [cf[(i + 1 + t) % k] for t in range(k)]
        if not _tokens_match(p.faces, ctx, forward):
            if not _tokens_match(p.faces, ctx, list(reversed(forward))):
                return False
    return True


def _tokens_match(tokens, ctx, face_ids) -> bool:
    return all(tok.matches(ctx, fi) for tok, fi in zip(tokens, face_ids))


def guarded_crossing(ctx: MatchContext, s, r, r_dart: int) -> bool:
    """The transfer-suppression pattern: receiver r is a crossing vertex
    with a small true neighbor w1 forming a 3-face corner (w1, r, s), and
    the segment r-w1 is flanked by at least one big face."""
    a = ctx.a
    star = ctx.star
    if a.classification[r].kind != CROSSING:
        return False
    rot = star.rotation[r]
    k = len(rot)
    i = rot.index(r_dart)
    cf = ctx.corner[r]
    for j, corner_fi in (((i - 1) % k, cf[i]), ((i + 1) % k, cf[(i + 1) % k])):
        if ctx.face_size[corner_fi] != 3:
            continue
        w1 = star.other_end(rot[j])
        cw = a.classification[w1]
        if cw.kind != TRUE or cw.size_class != "small":
            continue
        flanks = (ctx.face_size[cf[j]], ctx.face_size[cf[(j + 1) % k]])
        if max(flanks) >= 4:
            return True
    return False


# ---------------------------------------------------------------------------
# JSON (de)serialization

def _parse_face_token(v) -> FaceToken:
    if isinstance(v, bool):
        raise RuleError(f"bad face token {v!r}")
    if isinstance(v, int):
        return FaceToken(size=v)
    if isinstance(v, str):
        if v.endswith("+") and v[:-1].isdigit():
            return FaceToken(min_size=int(v[:-1]))
        raise RuleError(f"bad face token {v!r}")
    if isinstance(v, dict):
        unknown = set(v) - {"size", "new_edge", "min_bigs", "max_bigs", "min_share"}
        if unknown:
            raise RuleError(f"unknown face token keys: {sorted(unknown)}")
        size = v.get("size")
        exact = minimum = None
        if isinstance(size, int):
            exact = size
        elif isinstance(size, str) and size.endswith("+") and size[:-1].isdigit():
            minimum = int(size[:-1])
        elif size is not None:
            raise RuleError(f"bad size in face token {v!r}")
        share = v.get("min_share")
        if share is not None:
            try:
                share = Fraction(share)
            except (ValueError, ZeroDivisionError):
                raise RuleError(f"bad min_share in face token {v!r}") from None
        return FaceToken(
            size=exact,
            min_size=minimum,
            new_edge=v.get("new_edge"),
            min_bigs=v.get("min_bigs"),
            max_bigs=v.get("max_bigs"),
            min_share=share,
        )
    raise RuleError(f"bad face token {v!r}")


_END_KEYS = {
    "kind", "d1", "d2", "size_class", "new_incident", "min_degree",
    "via_new_edge", "num_crossing_neighbors", "opposite_end_small", "faces",
}


def _parse_end(d: dict, where: str) -> EndPattern:
    unknown = set(d) - _END_KEYS
    if unknown:
        raise RuleError(f"unknown {where} pattern keys: {sorted(unknown)}")
    faces = d.get("faces")
    if faces is not None:
        faces = tuple(_parse_face_token(t) for t in faces)
    return EndPattern(
        kind=d.get("kind"),
        d1=d.get("d1"),
        d2=d.get("d2"),
        size_class=d.get("size_class"),
        new_incident=d.get("new_incident"),
        min_degree=d.get("min_degree"),
        via_new_edge=d.get("via_new_edge"),
        num_crossing_neighbors=d.get("num_crossing_neighbors"),
        opposite_end_small=d.get("opposite_end_small"),
        faces=faces,
    )


def rule_table_from_dict(data: dict) -> RuleTable:
    if not isinstance(data, dict) or "rules" not in data:
        raise RuleError("rule table must be an object with a 'rules' list")
    rules = []
    seen = set()
    for entry in data["rules"]:
        rid = entry.get("id")
        if not rid or rid in seen:
            raise RuleError(f"missing or duplicate rule id {rid!r}")
        seen.add(rid)
        try:
            amount = Fraction(entry["amount"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError):
            raise RuleError(f"rule {rid}: bad amount") from None
        if amount not in AMOUNT_MENU:
            raise RuleError(
                f"rule {rid}: amount {amount} outside the menu "
                f"{[str(x) for x in AMOUNT_MENU]}"
            )
        rules.append(
            LocalRule(
                id=rid,
                sender=_parse_end(entry.get("sender", {}), "sender"),
                receiver=_parse_end(entry.get("receiver", {}), "receiver"),
                amount=amount,
            )
        )
    exclusions = tuple(data.get("exclusions", ()))
    for name in exclusions:
        if name != "guarded-crossing":
            raise RuleError(f"unknown exclusion {name!r}")
    return RuleTable(rules=rules, exclusions=exclusions)


def parse_rule_table(text: str) -> RuleTable:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RuleError(f"rule table is not valid JSON: {exc}") from None
    return rule_table_from_dict(data)


# ---------------------------------------------------------------------------
# The shipped default table.
#
# Sender side is uniform: a true vertex whose original degree is at least
# delta-2 (the bound forced on the far end of any original edge whose near
# end has degree at most five).  Receivers are grouped by their class;
# ids describe the receiver-side shape.  Token shorthand below: _T3O /
# _T3N are 3-faces without / with a new boundary edge, _Q1 a 4-face
# carrying at most one big occurrence.

_SENDER = {"kind": "true", "min_degree": "delta-2"}

_T3O = {"size": 3, "new_edge": False}
_T3N = {"size": 3, "new_edge": True}
_Q1 = {"size": 4, "max_bigs": 1}
_Q1N = {"size": 4, "max_bigs": 1, "new_edge": True}
_Q1O = {"size": 4, "max_bigs": 1, "new_edge": False}


def _rule(rid, receiver, amount, sender=None):
    return {
        "id": rid,
        "sender": dict(_SENDER, **(sender or {})),
        "receiver": receiver,
        "amount": amount,
    }


DEFAULT_TABLE_DICT = {
    "rules": [
        # -- 3-vertices with three corners ----------------------------------
        _rule(
            "r33-two-quads",
            {"kind": "true", "d1": 3, "d2": 3, "faces": [3, 4, 4]},
            "1/3",
        ),
        _rule(
            "r33-big-opposite",
            {"kind": "true", "d1": 3, "d2": 3, "faces": [3, "5+", 3]},
            "2/3",
        ),
        # -- 3-vertices with one new edge ------------------------------------
        _rule(
            "r34-new-quad",
            {"kind": "true", "d1": 3, "d2": 4, "faces": [_T3O, _Q1N, _T3N, _T3O]},
            "1/3",
        ),
        _rule(
            "r34-new-triangles",
            {"kind": "true", "d1": 3, "d2": 4, "faces": [_T3N, _T3N, _Q1O, _T3O]},
            "1/3",
        ),
        # -- plain 4-vertices -------------------------------------------------
        _rule(
            "r44-alternating",
            {"kind": "true", "d1": 4, "d2": 4, "faces": [4, 3, 4, 3]},
            "1/6",
        ),
        _rule(
            "r44-three-crossings",
            {
                "kind": "true", "d1": 4, "d2": 4,
                "num_crossing_neighbors": 3, "faces": [3, 4, 4, 3],
            },
            "2/3",
        ),
        _rule(
            "r44-two-crossings",
            {
                "kind": "true", "d1": 4, "d2": 4,
                "num_crossing_neighbors": 2, "faces": [3, 4, 4, 3],
            },
            "1/3",
        ),
        _rule(
            "r44-triple-triangle",
            {"kind": "true", "d1": 4, "d2": 4, "faces": [3, 3, "4+", 3]},
            "2/3",
        ),
        _rule(
            "r44-one-quad-flank",
            {"kind": "true", "d1": 4, "d2": 4, "faces": [3, 3, 3, 4]},
            "1/3",
        ),
        # -- crossing vertices ------------------------------------------------
        _rule(
            "rx-twin-bigs",
            {
                "kind": "crossing", "opposite_end_small": True,
                "faces": [3, "4+", "4+", 3],
            },
            "2/3",
        ),
        _rule(
            "rx-quad-flank",
            {
                "kind": "crossing", "opposite_end_small": True,
                "faces": [4, "4+", 3, 3],
            },
            "1/3",
        ),
        _rule(
            "rx-alternating",
            {
                "kind": "crossing", "opposite_end_small": True,
                "faces": [3, "4+", 3, "4+"],
            },
            "1/3",
        ),
        _rule(
            "rx-inner-new",
            {"kind": "crossing", "faces": [_T3O, _T3N, _T3O, "4+"]},
            "1/2",
        ),
        _rule(
            "rx-new-far-big",
            {"kind": "crossing", "faces": [_T3O, "4+", _T3N, _T3O]},
            "2/3",
        ),
        _rule(
            "rx-new-rich-big",
            {
                "kind": "crossing",
                "faces": [_T3O, _T3O, _T3N, {"size": "4+", "min_share": "1"}],
            },
            "1/3",
        ),
        _rule(
            "rx-new-lone-big",
            {"kind": "crossing", "faces": [_T3O, _T3O, _T3N, _Q1]},
            "2/3",
        ),
        _rule(
            "rx-triangles-side",
            {"kind": "crossing", "faces": [_T3O, _T3O, _T3O, "4+"]},
            "1/3",
        ),
        _rule(
            "rx-triangles-mid",
            {"kind": "crossing", "faces": [_T3O, "4+", _T3O, _T3O]},
            "1/3",
        ),
        # -- small 5-vertices (with or without a new edge) --------------------
        _rule(
            "r5-quad-calm",
            {
                "kind": "true", "d2": 5, "size_class": "small",
                "faces": [_T3O, _Q1, _T3O, _T3N, _T3N],
            },
            "1/6",
        ),
        _rule(
            "r5-quad-shifted-new",
            {
                "kind": "true", "d2": 5, "size_class": "small",
                "faces": [_T3O, _Q1, _T3N, _T3N, 3],
            },
            "1/3",
        ),
        _rule(
            "r5-new-quad-near",
            {
                "kind": "true", "d2": 5, "size_class": "small",
                "faces": [3, _T3N, _Q1N, 3, 3],
            },
            "1/3",
        ),
        _rule(
            "r5-new-quad-far",
            {
                "kind": "true", "d2": 5, "size_class": "small",
                "faces": [3, 3, _T3N, _Q1N, 3],
            },
            "1/3",
        ),
        _rule(
            "r5-fan-mid",
            {
                "kind": "true", "d2": 5, "size_class": "small",
                "faces": [_T3O, _T3O, _T3N, _T3N, _T3O],
            },
            "1/2",
        ),
        _rule(
            "r5-fan-far",
            {
                "kind": "true", "d2": 5, "size_class": "small",
                "faces": [_T3O, _T3O, _T3O, _T3N, _T3N],
            },
            "1/2",
        ),
        # Same full fan, but with the two true senders joined by a new edge
        # of their own: the triangle across from the sender is then new too.
        _rule(
            "r5-fan-bridged",
            {
                "kind": "true", "d2": 5, "size_class": "small",
                "faces": [_T3N, _T3O, _T3N, _T3N, _T3O],
            },
            "1/2",
        ),
    ],
    "exclusions": ["guarded-crossing"],
}

DEFAULT_TABLE_JSON = json.dumps(DEFAULT_TABLE_DICT, indent=2)

_default_cache = None


def default_rules() -> RuleTable:
    global _default_cache
    if _default_cache is None:
        _default_cache = rule_table_from_dict(DEFAULT_TABLE_DICT)
    return _default_cache
