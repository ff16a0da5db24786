"""Line-oriented text format (`.cbm`) for business-model instances.

Grammar, one statement per line; blank lines and lines starting with ``#``
are ignored::

    model <name>
    element <CONCEPT>
    relation <SUBJ> <VERB> <OBJ> [to <TARGET>]
    meta <key> <value>

Concept symbols and verbs use their canonical spellings (verbs with ``_``,
e.g. ``inf_on``); the aliases ``CP`` (for ``CAP``) and ``con`` (for ``conc``)
are accepted and resolved on input. The ternary delivery statement may be
written either ``relation CH delv VP to TC`` or with the explicit verb
``delv_to``; both parse to the same relation and serialize back to the
``delv ... to ...`` form.

Parsing is fail-fast: the first offending line raises ParseError with its
1-based line number. Serialization is canonical (elements sorted, relations
in schema order then lexicographic, metadata sorted by key), so
``parse_model(serialize_model(x)) == x`` for every constructible instance
and structurally equal instances serialize byte-identically.
"""

from __future__ import annotations

from .errors import ParseError
from .ontology import BusinessModel, Relation, Verb, parse_concept, parse_verb


def parse_model(source: str) -> BusinessModel:
    """Parse `.cbm` text into a BusinessModel. Raises ParseError."""
    name: str | None = None
    elements = []
    relations = []
    metadata: dict[str, str] = {}

    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()

        if head == "model":
            if name is not None:
                raise ParseError(lineno, ParseError.KIND_SYNTAX,
                                 "duplicate model statement")
            if not rest:
                raise ParseError(lineno, ParseError.KIND_SYNTAX,
                                 "model statement needs a name")
            name = rest
        elif head == "element":
            tokens = rest.split()
            if len(tokens) != 1:
                raise ParseError(lineno, ParseError.KIND_SYNTAX,
                                 "expected: element <CONCEPT>")
            try:
                concept = parse_concept(tokens[0])
            except ValueError as exc:
                raise ParseError(lineno, ParseError.KIND_UNKNOWN_CONCEPT,
                                 str(exc)) from None
            if concept in elements:
                raise ParseError(lineno, ParseError.KIND_DUPLICATE_ELEMENT,
                                 f"element {concept.value} already declared")
            elements.append(concept)
        elif head == "relation":
            relations.append(_parse_relation(lineno, rest))
        elif head == "meta":
            parts = rest.split(None, 1)
            if len(parts) != 2:
                raise ParseError(lineno, ParseError.KIND_SYNTAX,
                                 "expected: meta <key> <value>")
            metadata[parts[0]] = parts[1]
        else:
            raise ParseError(lineno, ParseError.KIND_SYNTAX,
                             f"unknown statement {head!r}")

    return BusinessModel(name if name is not None else "unnamed",
                         frozenset(elements), tuple(relations), metadata)


def _parse_relation(lineno: int, rest: str) -> Relation:
    tokens = rest.split()
    if len(tokens) == 5 and tokens[3] == "to":
        subj_tok, verb_tok, obj_tok, target_tok = tokens[0], tokens[1], tokens[2], tokens[4]
    elif len(tokens) == 3:
        subj_tok, verb_tok, obj_tok, target_tok = tokens[0], tokens[1], tokens[2], None
    else:
        raise ParseError(lineno, ParseError.KIND_BAD_ARITY,
                         "expected: relation <SUBJ> <VERB> <OBJ> [to <TARGET>]")

    try:
        verb = parse_verb(verb_tok)
    except ValueError as exc:
        raise ParseError(lineno, ParseError.KIND_UNKNOWN_VERB, str(exc)) from None

    concepts = []
    for tok in (subj_tok, obj_tok, target_tok):
        if tok is None:
            concepts.append(None)
            continue
        try:
            concepts.append(parse_concept(tok))
        except ValueError as exc:
            raise ParseError(lineno, ParseError.KIND_UNKNOWN_CONCEPT,
                             str(exc)) from None
    subject, obj, target = concepts

    if target is not None:
        if verb not in (Verb.DELV, Verb.DELV_TO):
            raise ParseError(lineno, ParseError.KIND_BAD_ARITY,
                             f"verb {verb.value} does not take a target")
        verb = Verb.DELV_TO
    elif verb is Verb.DELV_TO:
        raise ParseError(lineno, ParseError.KIND_BAD_ARITY,
                         "verb delv_to requires 'to <TARGET>'")

    return Relation(subject, verb, obj, target)


def serialize_model(model: BusinessModel) -> str:
    """Render a BusinessModel in canonical `.cbm` text."""
    lines = [f"model {model.name}"]
    for concept in sorted(model.elements, key=lambda c: c.value):
        lines.append(f"element {concept.value}")
    for rel in model.relations:  # already canonically ordered by the type
        if rel.verb is Verb.DELV_TO:
            lines.append(f"relation {rel.subject.value} delv {rel.obj.value}"
                         f" to {rel.target.value}")
        else:
            lines.append(f"relation {rel.subject.value} {rel.verb.value}"
                         f" {rel.obj.value}")
    for key in sorted(model.metadata):
        lines.append(f"meta {key} {model.metadata[key]}")
    return "\n".join(lines) + "\n"
