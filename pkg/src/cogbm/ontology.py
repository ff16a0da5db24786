"""The cognitive business-model ontology: concepts, verbs, schema, validation.

The schema is closed and fixed. It holds 17 concepts: the nine classic
building blocks of a business model (value proposition, customers, channels,
relationship, capabilities, configuration, partnership, revenue, cost), five
cognitive blocks describing how customers decide (information and knowledge,
emotions, environment, thoughts, preferences), profit as the outcome, and two
auxiliary concepts (customer segment, criteria) that only appear inside
relation assertions. Concepts relate through 17 typed verbs in exactly 29
assertions; nothing may be inferred beyond them.

Fourteen of the concepts act as model inputs for profit prediction; the first
nine of those form the classic baseline input set, the remaining five are the
cognitive extension.

Everything in this module is an immutable value. Construction never fails for
structurally well-typed data; semantic problems are reported by
``validate_instance`` rather than raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Optional


class Concept(Enum):
    """One of the 17 concept identifiers. No others are constructible."""

    VP = "VP"
    TC = "TC"
    CAP = "CAP"
    CH = "CH"
    TCR = "TCR"
    CQ = "CQ"
    CR = "CR"
    VC = "VC"
    PRT = "PRT"
    INF = "INF"
    EM = "EM"
    EN = "EN"
    TH = "TH"
    PRF = "PRF"
    RV = "RV"
    CS = "CS"
    PF = "PF"

    @property
    def title(self) -> str:
        return _CONCEPT_TITLES[self]


_CONCEPT_TITLES: dict[Concept, str] = {
    Concept.VP: "Value Proposition",
    Concept.TC: "Target Customer",
    Concept.CAP: "Capability",
    Concept.CH: "Channel",
    Concept.TCR: "Relationship",
    Concept.CQ: "Customer Segment",
    Concept.CR: "Criteria",
    Concept.VC: "Value Configuration",
    Concept.PRT: "Partnership",
    Concept.INF: "Information and Knowledge",
    Concept.EM: "Values and Emotions",
    Concept.EN: "Environment and Conditions",
    Concept.TH: "Thoughts and Perceptions",
    Concept.PRF: "Preferences",
    Concept.RV: "Revenue",
    Concept.CS: "Cost",
    Concept.PF: "Profit",
}

# Alternate spellings accepted on input and resolved silently.
CONCEPT_ALIASES: dict[str, Concept] = {"CP": Concept.CAP}


class Verb(Enum):
    """One of the 17 relation verbs. ``delv_to`` is the ternary delivery verb
    (it carries a target concept in addition to its object)."""

    REP = "rep"
    COMP = "comp"
    BASE = "base"
    RECV = "recv"
    DELV = "delv"
    DELV_TO = "delv_to"
    CONC = "conc"
    ESTAB = "estab"
    CONT = "cont"
    SET_OF = "set_of"
    ALLO = "allo"
    PROV = "prov"
    RELY = "rely"
    HAS = "has"
    SUP = "sup"
    INF_ON = "inf_on"
    INF_OF = "inf_of"

    @property
    def gloss(self) -> str:
        return _VERB_GLOSSES[self]


_VERB_GLOSSES: dict[Verb, str] = {
    Verb.REP: "represents value for",
    Verb.COMP: "is composed of",
    Verb.BASE: "is based on",
    Verb.RECV: "it receives a",
    Verb.DELV: "it delivers a",
    Verb.DELV_TO: "it delivers to a",
    Verb.CONC: "it concerns a",
    Verb.ESTAB: "it is established with",
    Verb.CONT: "it contributes to",
    Verb.SET_OF: "it set of",
    Verb.ALLO: "it allows to provide the",
    Verb.PROV: "it provides",
    Verb.RELY: "it relies on",
    Verb.HAS: "it has a type",
    Verb.SUP: "it supports the",
    Verb.INF_ON: "it influences on",
    Verb.INF_OF: "it influences of",
}

VERB_ALIASES: dict[str, Verb] = {"con": Verb.CONC}


def parse_concept(token: str) -> Concept:
    """Resolve a concept symbol, accepting aliases. Raises ValueError."""
    if token in CONCEPT_ALIASES:
        return CONCEPT_ALIASES[token]
    try:
        return Concept(token)
    except ValueError:
        raise ValueError(f"unknown concept symbol {token!r}") from None


def parse_verb(token: str) -> Verb:
    """Resolve a relation verb, accepting aliases. Raises ValueError."""
    if token in VERB_ALIASES:
        return VERB_ALIASES[token]
    try:
        return Verb(token)
    except ValueError:
        raise ValueError(f"unknown relation verb {token!r}") from None


@dataclass(frozen=True)
class Relation:
    """A subject-verb-object assertion; ``target`` is used by delv_to only.

    The arity rule (target present iff verb is delv_to) is deliberately not
    enforced at construction so that malformed assertions can be *reported*
    by validation instead of crashing whoever built them.
    """

    subject: Concept
    verb: Verb
    obj: Concept
    target: Optional[Concept] = None

    @property
    def triple(self) -> tuple[Concept, Verb, Concept]:
        return (self.subject, self.verb, self.obj)

    @property
    def well_formed(self) -> bool:
        return (self.target is not None) == (self.verb is Verb.DELV_TO)


@dataclass(frozen=True)
class Schema:
    """The closed relation schema plus the input/output element designation."""

    concepts: frozenset[Concept]
    verbs: frozenset[Verb]
    assertions: tuple[Relation, ...]
    input_elements: tuple[Concept, ...]
    output_element: Concept

    @property
    def baseline_inputs(self) -> tuple[Concept, ...]:
        """The first nine input elements: the classic, pre-cognitive set."""
        return self.input_elements[:9]

    @property
    def triples(self) -> frozenset[tuple[Concept, Verb, Concept]]:
        return frozenset(a.triple for a in self.assertions)


_C = Concept
_V = Verb

# The 29 assertions of the fixed schema. The delivery assertion is the single
# ternary one (channel delivers the value proposition to the target customer).
_ASSERTION_ROWS: tuple[tuple[Concept, Verb, Concept, Optional[Concept]], ...] = (
    (_C.VP, _V.REP, _C.TC, None),
    (_C.VP, _V.BASE, _C.CAP, None),
    (_C.TC, _V.RECV, _C.VP, None),
    (_C.TC, _V.COMP, _C.CR, None),
    (_C.CH, _V.DELV_TO, _C.VP, _C.TC),
    (_C.TCR, _V.CONC, _C.VP, None),
    (_C.TCR, _V.ESTAB, _C.TC, None),
    (_C.TCR, _V.CONT, _C.CQ, None),
    (_C.CAP, _V.ALLO, _C.VP, None),
    (_C.VC, _V.PROV, _C.VP, None),
    (_C.VC, _V.RELY, _C.CAP, None),
    (_C.PRT, _V.SUP, _C.VP, None),
    (_C.PRT, _V.RELY, _C.CAP, None),
    (_C.INF, _V.INF_ON, _C.PRF, None),
    (_C.INF, _V.INF_OF, _C.PRF, None),
    (_C.EM, _V.ESTAB, _C.TH, None),
    (_C.EN, _V.INF_ON, _C.PRF, None),
    (_C.TH, _V.INF_ON, _C.PRF, None),
    (_C.TH, _V.INF_ON, _C.INF, None),
    (_C.TH, _V.INF_OF, _C.INF, None),
    (_C.PRF, _V.INF_OF, _C.INF, None),
    (_C.PRF, _V.INF_OF, _C.EM, None),
    (_C.PRF, _V.INF_OF, _C.EN, None),
    (_C.PRF, _V.INF_OF, _C.TH, None),
    (_C.CS, _V.ESTAB, _C.VC, None),
    (_C.CS, _V.ESTAB, _C.CAP, None),
    (_C.RV, _V.RELY, _C.CQ, None),
    (_C.PF, _V.RELY, _C.RV, None),
    (_C.PF, _V.RELY, _C.CS, None),
)

# Input element order: the nine classic blocks first, cognitive blocks after.
_INPUT_ELEMENTS: tuple[Concept, ...] = (
    _C.CAP, _C.PRT, _C.VP, _C.VC, _C.TC, _C.TCR, _C.CH, _C.RV, _C.CS,
    _C.INF, _C.EM, _C.EN, _C.TH, _C.PRF,
)

_CANONICAL_SCHEMA = Schema(
    concepts=frozenset(Concept),
    verbs=frozenset(Verb),
    assertions=tuple(Relation(s, v, o, t) for s, v, o, t in _ASSERTION_ROWS),
    input_elements=_INPUT_ELEMENTS,
    output_element=_C.PF,
)

# Position of each canonical assertion, used for canonical relation ordering.
_SCHEMA_INDEX: dict[tuple, int] = {
    (a.subject, a.verb, a.obj, a.target): i
    for i, a in enumerate(_CANONICAL_SCHEMA.assertions)
}


def canonical_schema() -> Schema:
    """The singleton fixed schema (17 concepts, 17 verbs, 29 assertions)."""
    return _CANONICAL_SCHEMA


def _relation_sort_key(rel: Relation) -> tuple:
    idx = _SCHEMA_INDEX.get((rel.subject, rel.verb, rel.obj, rel.target))
    if idx is not None:
        return (0, idx, "", "", "", "")
    return (
        1,
        0,
        rel.subject.value,
        rel.verb.value,
        rel.obj.value,
        rel.target.value if rel.target is not None else "",
    )


@dataclass(frozen=True)
class BusinessModel:
    """A concrete business model: declared elements, relations, metadata.

    Relations are stored deduplicated and in canonical order (schema order
    first, then lexicographic), so two models that differ only in relation
    insertion order compare equal. Name, metadata keys and values must be
    nonempty single-line strings with no surrounding whitespace; keys must
    additionally contain no whitespace at all. These constraints are exactly
    what the text format can represent losslessly.
    """

    name: str
    elements: frozenset[Concept] = field(default_factory=frozenset)
    relations: tuple[Relation, ...] = ()
    metadata: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.name or self.name != self.name.strip() or "\n" in self.name:
            raise ValueError("model name must be nonempty, stripped, single-line")
        object.__setattr__(self, "elements", frozenset(self.elements))
        deduped = sorted(set(self.relations), key=_relation_sort_key)
        object.__setattr__(self, "relations", tuple(deduped))
        meta = dict(self.metadata)
        for k, v in meta.items():
            if not k or k.split() != [k]:
                raise ValueError(f"metadata key {k!r} must be a single token")
            if not v or v != v.strip() or "\n" in v:
                raise ValueError(
                    f"metadata value for {k!r} must be nonempty, stripped, single-line"
                )
        object.__setattr__(self, "metadata", meta)

    def with_elements(self, *extra: Concept) -> "BusinessModel":
        return BusinessModel(self.name, self.elements | set(extra),
                             self.relations, self.metadata)

    def without_element(self, concept: Concept) -> "BusinessModel":
        return BusinessModel(self.name, self.elements - {concept},
                             self.relations, self.metadata)

    def with_relations(self, *extra: Relation) -> "BusinessModel":
        return BusinessModel(self.name, self.elements,
                             self.relations + tuple(extra), self.metadata)

    def without_relation(self, rel: Relation) -> "BusinessModel":
        kept = tuple(r for r in self.relations if r != rel)
        return BusinessModel(self.name, self.elements, kept, self.metadata)


def canonical_model(name: str = "canonical") -> BusinessModel:
    """The full instance: all 17 concepts declared, all 29 relations asserted."""
    schema = canonical_schema()
    return BusinessModel(name, schema.concepts, schema.assertions)


class ViolationCode(Enum):
    MISSING_ELEMENT = "MissingElement"
    UNKNOWN_RELATION = "UnknownRelation"
    MISSING_REQUIRED_RELATION = "MissingRequiredRelation"
    DANGLING_REFERENCE = "DanglingReference"
    MALFORMED_ASSERTION = "MalformedAssertion"


_CODE_ORDER = {code: i for i, code in enumerate(ViolationCode)}


@dataclass(frozen=True)
class Violation:
    code: ViolationCode
    subject: Concept
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def by_code(self, code: ViolationCode) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.code is code)


def validate_instance(instance: BusinessModel,
                      schema: Schema | None = None) -> ValidationReport:
    """Check an instance against the schema and report every problem found.

    Reported violations, in deterministic order (code, then subject symbol):

    * MissingElement -- a schema input/output element is not declared.
    * UnknownRelation -- an instance relation whose (subject, verb, object)
      triple is not among the schema assertions.
    * MissingRequiredRelation -- a schema assertion whose referenced concepts
      are all declared but whose triple is absent from the instance.
    * DanglingReference -- a relation mentions an undeclared concept.
    * MalformedAssertion -- a relation breaks the delv_to target-arity rule.

    Triples are matched ignoring the delv_to target; the target participates
    in arity and dangling checks only. Pure: identical inputs always produce
    identical reports.
    """
    schema = schema or canonical_schema()
    violations: list[Violation] = []

    required = tuple(schema.input_elements) + (schema.output_element,)
    for el in required:
        if el not in instance.elements:
            violations.append(Violation(
                ViolationCode.MISSING_ELEMENT, el,
                f"required element {el.value} ({el.title}) is not declared"))

    schema_triples = schema.triples
    instance_triples = {r.triple for r in instance.relations}

    for rel in instance.relations:
        if not rel.well_formed:
            expected = "requires" if rel.verb is Verb.DELV_TO else "does not take"
            violations.append(Violation(
                ViolationCode.MALFORMED_ASSERTION, rel.subject,
                f"verb {rel.verb.value} {expected} a target"))
        refs = [rel.subject, rel.obj] + ([rel.target] if rel.target else [])
        undeclared = [c for c in refs if c not in instance.elements]
        if undeclared:
            names = ", ".join(c.value for c in undeclared)
            violations.append(Violation(
                ViolationCode.DANGLING_REFERENCE, rel.subject,
                f"relation references undeclared element(s): {names}"))
        if rel.triple not in schema_triples:
            violations.append(Violation(
                ViolationCode.UNKNOWN_RELATION, rel.subject,
                f"{rel.subject.value} {rel.verb.value} {rel.obj.value}"
                " is not a schema assertion"))

    for assertion in schema.assertions:
        refs = [assertion.subject, assertion.obj]
        if assertion.target is not None:
            refs.append(assertion.target)
        if all(c in instance.elements for c in refs):
            if assertion.triple not in instance_triples:
                violations.append(Violation(
                    ViolationCode.MISSING_REQUIRED_RELATION, assertion.subject,
                    f"schema assertion {assertion.subject.value}"
                    f" {assertion.verb.value} {assertion.obj.value} is missing"))

    violations.sort(key=lambda v: (_CODE_ORDER[v.code], v.subject.value, v.detail))
    return ValidationReport(tuple(violations))
