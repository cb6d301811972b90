"""End-to-end informal-to-formal conversion with token-range alignments.

Pipeline (fixed order): normalize, collapse emphasis repetition,
tokenize, longest-match-leftmost phrase dictionary, single-token
dictionary, the three rule stages, suffix disambiguation and clitic
handling, limited syntactic transforms, detokenize. Unknown material
passes through unchanged with identity links; the converter makes the
minimum change that yields a formal surface and never paraphrases.

Alignment granularity is token ranges: a sub-token clitic maps its
whole informal token to a (possibly multi-token) formal span.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from rasmi import rules as rules_mod
from rasmi import textcore
from rasmi.alignment import AlignmentLink, has_syntactic_change
from rasmi.lexicon import AmbiguityEntry, Lexicon

ZWNJ = textcore.ZWNJ

_PUNCT = "".join(sorted(textcore.PUNCTUATION))

SENTENCE_PUNCT = set(".!؟?…")
CLAUSE_PUNCT = set("،؛,;")


def split_punct(surface: str) -> tuple[str, str, str]:
    """Split a token into (leading punct, core, trailing punct)."""
    start, end = 0, len(surface)
    while start < end and surface[start] in textcore.PUNCTUATION:
        start += 1
    while end > start and surface[end - 1] in textcore.PUNCTUATION:
        end -= 1
    if start == end:  # nothing but punctuation: treat it as trailing
        return "", "", surface
    return surface[:start], surface[start:end], surface[end:]


# ---------------------------------------------------------------------------
# Verb lexicon
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerbLexEntry:
    informal: str
    formal: str
    flags: frozenset[str] = frozenset()
    causative_of: str | None = None
    perfect_alt: str | None = None

    def has(self, flag: str) -> bool:
        return flag in self.flags


class VerbLexicon:
    """Verb surfaces (informal and formal) with grammatical features."""

    def __init__(self, entries: list[VerbLexEntry] = ()):  # type: ignore[assignment]
        self._by_surface: dict[str, VerbLexEntry] = {}
        for e in entries:
            self._by_surface.setdefault(e.informal, e)
            self._by_surface.setdefault(e.formal, e)

    def get(self, surface: str) -> VerbLexEntry | None:
        return self._by_surface.get(surface)

    def is_verb(self, surface: str) -> bool:
        """True for known verb surfaces, including forms carrying a final pronoun clitic."""
        if surface in self._by_surface:
            return True
        return surface.endswith("ش") and surface[:-1] in self._by_surface

    @classmethod
    def load(cls, path: str | Path) -> "VerbLexicon":
        entries = []
        for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if not 3 <= len(cols) <= 5:
                raise ValueError(f"{path}: line {line_no}: expected 3-5 columns, got {len(cols)}")
            cols += [""] * (5 - len(cols))
            informal, formal, flags_s, causative, perfect = cols
            entries.append(VerbLexEntry(
                informal, formal,
                frozenset(f for f in flags_s.split(",") if f),
                causative or None, perfect or None))
        return cls(entries)


# ---------------------------------------------------------------------------
# Converter configuration
# ---------------------------------------------------------------------------

@dataclass
class ConverterConfig:
    lexicon: Lexicon = field(default_factory=Lexicon)
    ruleset: rules_mod.RuleSet = field(default_factory=rules_mod.RuleSet)
    verbs: VerbLexicon = field(default_factory=VerbLexicon)
    ambiguity: dict[str, AmbiguityEntry] = field(default_factory=dict)
    tanvin_map: dict[str, str] = field(default_factory=dict)
    nouns: set[str] = field(default_factory=set)
    adjectives: set[str] = field(default_factory=set)
    pronouns: set[str] = field(default_factory=set)
    names: set[str] = field(default_factory=set)
    destinations: set[str] = field(default_factory=set)
    idioms: set[str] = field(default_factory=set)
    history: Lexicon | None = None

    def is_verb(self, surface: str) -> bool:
        return self.verbs.is_verb(surface)

    # Which stem classes license disambiguation of each suffix. Keeping
    # the gate narrow is what protects ordinary vocabulary (words that
    # merely end in the same letter) from being rewritten.
    def suffix_gate(self, suffix: str, stem: str) -> bool:
        if not stem:
            return False
        if suffix in ("و", "رو", "م"):
            return stem in self.nouns or stem in self.pronouns
        if suffix in ("ه", "ی"):
            return stem in self.nouns or stem in self.adjectives
        return False

    def rule_predicates(self):
        return {"verb": self.is_verb,
                "noun": lambda s: s in self.nouns,
                "pronoun": lambda s: s in self.pronouns}


# ---------------------------------------------------------------------------
# Suffix disambiguation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SuffixContext:
    cores: tuple[str, ...]
    index: int


def _cue_fires(cue: str, ctx: SuffixContext, stem: str, cfg: ConverterConfig) -> bool:
    if not cue:
        return False
    cores, idx, n = ctx.cores, ctx.index, len(ctx.cores)
    for atom in cue.split("&"):
        if atom == "later-verb":
            ok = any(cfg.is_verb(c) for c in cores[idx + 1:])
        elif atom == "no-later-verb":
            ok = not any(cfg.is_verb(c) for c in cores[idx + 1:])
        elif atom == "right-noun":
            ok = idx + 1 < n and cores[idx + 1] in cfg.nouns
        elif atom == "next-possessor":
            ok = idx + 1 < n and (cores[idx + 1] in cfg.pronouns or cores[idx + 1] in cfg.names)
        elif atom == "sent-final":
            ok = idx == n - 1
        elif atom == "sent-nonfinal":
            ok = idx < n - 1
        elif atom == "len1":
            ok = n == 1
        elif atom == "len-ge2":
            ok = n >= 2
        elif atom == "start-pron-1sg":
            ok = bool(cores) and cores[0] == "من"
        elif atom == "start-pron-2sg":
            ok = bool(cores) and cores[0] == "تو"
        elif atom == "stem-noun":
            ok = stem in cfg.nouns
        elif atom == "stem-adjective":
            ok = stem in cfg.adjectives
        elif atom == "in-tanvin-map":
            ok = ctx.cores[idx] in cfg.tanvin_map
        else:
            raise ValueError(f"unknown context cue: {atom!r}")
        if not ok:
            return False
    return True


def _render(template: str, stem: str, token: str, cfg: ConverterConfig) -> str:
    if "{tanvin}" in template:
        return template.replace("{tanvin}", cfg.tanvin_map.get(token, token))
    return template.replace("{stem}", stem)


def disambiguate(token, suffix: str, context: SuffixContext,
                 history: Lexicon | None, cfg: ConverterConfig) -> tuple[str, list[str]]:
    """Expand an ambiguous informal suffix.

    Selection order: highest history frequency for (token -> candidate)
    pairs, then the first context cue that fires, then the ambiguity
    table's priority order. Unchosen candidates come back as
    alternatives.
    """
    core = token.surface if isinstance(token, textcore.Token) else token
    entry = cfg.ambiguity.get(suffix)
    if entry is None:
        raise KeyError(f"suffix {suffix!r} is not in the ambiguity table")
    stem = core[:-len(suffix)].rstrip(ZWNJ)
    rendered: list[str] = []
    for template, _role, _cue in entry.candidates:
        exp = _render(template, stem, core, cfg)
        if exp not in rendered:
            rendered.append(exp)

    chosen: str | None = None
    if history is not None:
        freqs = {}
        for e in history.lookup(core):
            if e.formal in rendered:
                freqs[e.formal] = freqs.get(e.formal, 0) + e.frequency
        if freqs:
            best = max(freqs.values())
            top = [x for x in rendered if freqs.get(x) == best]
            if len(top) == 1:
                chosen = top[0]
    if chosen is None:
        for template, _role, cue in entry.candidates:
            if _cue_fires(cue, context, stem, cfg):
                chosen = _render(template, stem, core, cfg)
                break
    if chosen is None:
        chosen = rendered[0]
    return chosen, [x for x in rendered if x != chosen]


# ---------------------------------------------------------------------------
# Working segments
# ---------------------------------------------------------------------------

@dataclass
class OutTok:
    core: str
    pre: str = ""
    post: str = ""

    @property
    def surface(self) -> str:
        return self.pre + self.core + self.post


@dataclass
class Segment:
    """A run of informal tokens and the formal tokens replacing it."""

    src: tuple[int, int] | None  # None marks an inserted segment
    toks: list[OutTok]
    locked: bool = False

    @property
    def deleted(self) -> bool:
        return not self.toks


@dataclass(frozen=True)
class TraceEvent:
    stage: str
    ref: str
    informal_index: int
    before: str
    after: str


@dataclass
class ConversionResult:
    informal_text: str
    formal_text: str
    links: list[AlignmentLink]
    trace: list[TraceEvent]
    alternatives: list[tuple[int, list[str]]]
    syntactic_change: bool
    emphasis: tuple[tuple[int, int], ...] = ()

    def to_json(self) -> dict:
        return {
            "informal_text": self.informal_text,
            "formal_text": self.formal_text,
            "links": [l.to_json() for l in self.links],
            "trace": [{"stage": t.stage, "ref": t.ref, "informal_index": t.informal_index,
                       "before": t.before, "after": t.after} for t in self.trace],
            "alternatives": [{"informal_index": i, "expansions": alts}
                             for i, alts in self.alternatives],
            "syntactic_change": self.syntactic_change,
            "emphasis": [list(f) for f in self.emphasis],
        }


class Converter:
    def __init__(self, config: ConverterConfig):
        self.cfg = config

    # -- pipeline stages ----------------------------------------------------

    def convert(self, informal: str) -> ConversionResult:
        normalized = textcore.normalize_text(informal)
        tokens = textcore.tokenize(normalized)
        segments: list[Segment] = []
        for tok in tokens:
            pre, core, post = split_punct(tok.surface)
            segments.append(Segment((tok.index, tok.index + 1), [OutTok(core, pre, post)]))

        trace: list[TraceEvent] = []
        alternatives: list[tuple[int, list[str]]] = []

        if self._is_idiom(segments):
            links = self._links(segments, len(tokens))
            return ConversionResult(normalized.text, normalized.text, links, [], [],
                                    has_syntactic_change(links), normalized.emphasis_flags)

        self._phrase_stage(segments, trace)
        self._word_stage(segments, trace)
        final_punct = self._pop_final_punct(segments)
        # Syntactic movement can expose new rule or suffix contexts (a verb
        # arriving in final position, an object marker gaining its verb
        # neighbor), so the per-token stages iterate with the transforms
        # until the sentence is stable. Shipped data converges immediately;
        # the bound guards against pathological custom rule sets.
        for _ in range(3):
            before = self._signature(segments)
            self._rule_stage(segments, trace)
            self._suffix_stage(segments, trace, alternatives)
            self._syntactic_stage(segments, trace)
            if self._signature(segments) == before:
                break
        self._push_final_punct(segments, final_punct)

        formal = textcore.detokenize(
            [t.surface for seg in segments for t in seg.toks if t.surface])
        links = self._links(segments, len(tokens))
        return ConversionResult(normalized.text, formal, links, trace, alternatives,
                                has_syntactic_change(links), normalized.emphasis_flags)

    def _is_idiom(self, segments: list[Segment]) -> bool:
        sentence = " ".join(t.core for s in segments for t in s.toks if t.core)
        return sentence in self.cfg.idioms

    @staticmethod
    def _signature(segments: list[Segment]):
        return tuple((seg.src, tuple((t.pre, t.core, t.post) for t in seg.toks))
                     for seg in segments)

    def _phrase_stage(self, segments: list[Segment], trace: list[TraceEvent]) -> None:
        """Longest-match leftmost multi-token dictionary substitution."""
        max_n = min(self.cfg.lexicon.max_phrase_len(), 4)
        for n in range(max_n, 1, -1):
            i = 0
            while i + n <= len(segments):
                window = segments[i:i + n]
                usable = all(s.src is not None and not s.locked and len(s.toks) == 1
                             and s.toks[0].core for s in window)
                # interior punctuation breaks a phrase
                if usable and all(not s.toks[0].post for s in window[:-1]) \
                        and all(not s.toks[0].pre for s in window[1:]):
                    phrase = " ".join(s.toks[0].core for s in window)
                    entries = self.cfg.lexicon.lookup(phrase)
                    if entries:
                        formal = entries[0].formal.split(" ")
                        first, last = window[0], window[-1]
                        toks = [OutTok(c) for c in formal]
                        toks[0].pre = first.toks[0].pre
                        toks[-1].post = last.toks[0].post
                        merged = Segment((first.src[0], last.src[1]), toks, locked=True)
                        segments[i:i + n] = [merged]
                        trace.append(TraceEvent("lexicon-phrase", phrase,
                                                merged.src[0], phrase, entries[0].formal))
                        i += 1
                        continue
                i += 1

    def _word_stage(self, segments: list[Segment], trace: list[TraceEvent]) -> None:
        for seg in segments:
            if seg.locked or seg.src is None or len(seg.toks) != 1:
                continue
            core = seg.toks[0].core
            if not core:
                continue
            entries = self.cfg.lexicon.lookup(core)
            if entries:
                formal = entries[0].formal.split(" ")
                tok = seg.toks[0]
                seg.toks = [OutTok(c) for c in formal]
                seg.toks[0].pre = tok.pre
                seg.toks[-1].post = tok.post
                seg.locked = True
                trace.append(TraceEvent("lexicon", core, seg.src[0], core, entries[0].formal))

    def _flat(self, segments: list[Segment]) -> list[tuple[int, int]]:
        return [(si, ti) for si, seg in enumerate(segments) for ti in range(len(seg.toks))]

    def _rule_stage(self, segments: list[Segment], trace: list[TraceEvent]) -> None:
        flat = self._flat(segments)
        cores = [segments[si].toks[ti].core for si, ti in flat]
        skip = {p for p, (si, ti) in enumerate(flat)
                if segments[si].locked or not segments[si].toks[ti].core}
        rewritten, rule_trace = rules_mod.apply_stages(
            self.cfg.ruleset, cores, self.cfg.rule_predicates(), skip)
        for entry in rule_trace:
            si, _ti = flat[entry.token_index]
            src = segments[si].src
            trace.append(TraceEvent(f"rule:{entry.stage}", entry.rule_id,
                                    src[0] if src else -1, entry.before, entry.after))
        for pos, (si, ti) in enumerate(flat):
            segments[si].toks[ti].core = rewritten[pos]

    # -- suffix / clitic stage ----------------------------------------------

    def _suffix_stage(self, segments: list[Segment], trace: list[TraceEvent],
                      alternatives: list[tuple[int, list[str]]]) -> None:
        self._left_dislocation(segments, trace)
        self._double_indefinite(segments, trace)

        suffixes = sorted(self.cfg.ambiguity, key=len, reverse=True)
        for seg in segments:
            if seg.locked or seg.src is None or len(seg.toks) != 1:
                continue
            tok = seg.toks[0]
            core = tok.core
            if not core:
                continue

            stripped = self._strip_verb_clitic(core, segments, seg)
            if stripped is not None:
                tok.core = stripped
                seg.locked = True
                trace.append(TraceEvent("clitic", "drop-pronoun-clitic",
                                        seg.src[0], core, stripped))
                continue

            verb_entry = self.cfg.verbs.get(core)
            if verb_entry and verb_entry.perfect_alt:
                entry = (seg.src[0], [verb_entry.perfect_alt])
                if entry not in alternatives:
                    alternatives.append(entry)

            for suffix in suffixes:
                if not core.endswith(suffix) or len(core) <= len(suffix):
                    continue
                stem = core[:-len(suffix)].rstrip(ZWNJ)
                if suffix == "ا":
                    if core not in self.cfg.tanvin_map:
                        continue
                elif not self.cfg.suffix_gate(suffix, stem):
                    continue
                ctx = SuffixContext(tuple(self._cores(segments)), self._core_index(segments, seg))
                chosen, alts = disambiguate(core, suffix, ctx, self.cfg.history, self.cfg)
                if alts and (seg.src[0], alts) not in alternatives:
                    alternatives.append((seg.src[0], alts))
                if chosen != core:
                    parts = chosen.split(" ")
                    seg.toks = [OutTok(c) for c in parts]
                    seg.toks[0].pre = tok.pre
                    seg.toks[-1].post = tok.post
                    seg.locked = True
                    trace.append(TraceEvent("suffix", suffix, seg.src[0], core, chosen))
                break

    def _cores(self, segments: list[Segment]) -> list[str]:
        return [t.core for s in segments for t in s.toks if t.core]

    def _core_index(self, segments: list[Segment], target: Segment) -> int:
        idx = 0
        for seg in segments:
            for t in seg.toks:
                if not t.core:
                    continue
                if seg is target:
                    return idx
                idx += 1
        return idx

    def _strip_verb_clitic(self, core: str, segments: list[Segment],
                           seg: Segment) -> str | None:
        """Drop a final pronoun clitic from a verb when it has no formal slot:
        subject clitics on intransitives and doubled object clitics."""
        if not core.endswith("ش") or len(core) < 3:
            return None
        base = core[:-1]
        entry = self.cfg.verbs.get(base)
        if entry is None:
            return None
        if entry.has("intransitive"):
            return base
        earlier = []
        for s in segments:
            if s is seg:
                break
            earlier.extend(t.core for t in s.toks)
        if any(c in ("را", "رو") for c in earlier):
            return base
        return None

    def _left_dislocation(self, segments: list[Segment], trace: list[TraceEvent]) -> None:
        """Rebuild a sentence-initial [noun, host+possessive-clitic] pair as an
        Ezafe possessive (the dislocated topic occupies the left periphery)."""
        if len(segments) >= 2:
            i = 0
            a, b = segments[i], segments[i + 1]
            if (a.locked or b.locked or a.src is None or b.src is None
                    or len(a.toks) != 1 or len(b.toks) != 1):
                return
            head = a.toks[0].core
            host = b.toks[0].core
            if head not in self.cfg.names:
                return
            if not host.endswith("ش") or host[:-1] not in self.cfg.nouns:
                return
            base = host[:-1]
            if base[-1] in "او":
                ezafe = base + "ی"
            elif base[-1] == "ه":
                ezafe = base + ZWNJ + "ی"
            else:
                ezafe = base
            b.toks[0].core = ezafe
            b.locked = True
            a.locked = True
            segments[i], segments[i + 1] = b, a
            trace.append(TraceEvent("dislocation", "ezafe-possessive",
                                    a.src[0], f"{head} {host}", f"{ezafe} {head}"))
            return

    def _double_indefinite(self, segments: list[Segment], trace: list[TraceEvent]) -> None:
        """Drop the indefinite article when the next noun already carries
        the indefinite suffix."""
        for i in range(len(segments) - 1):
            a, b = segments[i], segments[i + 1]
            if a.src is None or b.src is None or len(a.toks) != 1 or len(b.toks) != 1:
                continue
            art = a.toks[0].core
            nxt = b.toks[0].core
            if art not in ("یه", "یک"):
                continue
            if nxt.endswith("ی") and nxt[:-1].rstrip(ZWNJ) in self.cfg.nouns:
                before = art
                a.toks = []
                a.locked = True
                trace.append(TraceEvent("deletion", "double-indefinite",
                                        a.src[0], before, ""))

    # -- syntactic transforms -----------------------------------------------

    def _pop_final_punct(self, segments: list[Segment]) -> str:
        for seg in reversed(segments):
            if seg.toks:
                tok = seg.toks[-1]
                if tok.post and all(c in SENTENCE_PUNCT for c in tok.post):
                    punct, tok.post = tok.post, ""
                    return punct
                return ""
        return ""

    def _push_final_punct(self, segments: list[Segment], punct: str) -> None:
        if not punct:
            return
        for seg in reversed(segments):
            if seg.toks:
                seg.toks[-1].post += punct
                return

    def _syntactic_stage(self, segments: list[Segment], trace: list[TraceEvent]) -> None:
        self._restore_ast(segments, trace)
        self._insert_be(segments, trace)
        self._insert_va(segments, trace)
        self._insert_agar(segments, trace)
        self._verb_final(segments, trace)
        self._causative(segments, trace)

    def _single_core(self, seg: Segment) -> str | None:
        if len(seg.toks) == 1 and seg.toks[0].core:
            return seg.toks[0].core
        return None

    def _restore_ast(self, segments: list[Segment], trace: list[TraceEvent]) -> None:
        """Append the copula after a sentence-final perfect participle."""
        last = next((s for s in reversed(segments) if s.toks), None)
        if last is None:
            return
        core = last.toks[-1].core
        entry = self.cfg.verbs.get(core)
        if entry and entry.has("participle"):
            segments.append(Segment(None, [OutTok("است")]))
            trace.append(TraceEvent("syntactic:ast", "restore-copula",
                                    last.src[1] if last.src else -1, core, f"{core} است"))

    def _insert_be(self, segments: list[Segment], trace: list[TraceEvent]) -> None:
        """Insert the destination preposition between a motion verb and a bare
        destination noun."""
        i = 0
        while i + 1 < len(segments):
            a, b = segments[i], segments[i + 1]
            ca = a.toks[-1].core if a.toks else None
            cb = b.toks[0].core if b.toks else None
            if ca and cb and cb in self.cfg.destinations:
                entry = self.cfg.verbs.get(ca)
                if entry and entry.has("motion") and entry.has("dest"):
                    segments.insert(i + 1, Segment(None, [OutTok("به")]))
                    trace.append(TraceEvent("syntactic:be", "restore-preposition",
                                            b.src[0] if b.src else -1, cb, f"به {cb}"))
                    i += 2
            i += 1

    def _insert_va(self, segments: list[Segment], trace: list[TraceEvent]) -> None:
        """Insert the coordinating conjunction between juxtaposed nouns before
        an imperative verb. Works over the flat token sequence; the insertion
        point must fall on a segment boundary."""
        flat = [(si, ti, tok.core) for si, seg in enumerate(segments)
                for ti, tok in enumerate(seg.toks) if tok.core]
        for p in range(len(flat) - 2):
            (s1, t1, c1), (s2, t2, c2), (_s3, _t3, c3) = flat[p], flat[p + 1], flat[p + 2]
            if c1 not in self.cfg.nouns or c2 not in self.cfg.nouns:
                continue
            entry = self.cfg.verbs.get(c3)
            if not (entry and entry.has("imperative")):
                continue
            boundary = s2 == s1 + 1 and t2 == 0 and t1 == len(segments[s1].toks) - 1
            if not boundary:
                continue
            segments.insert(s2, Segment(None, [OutTok("و")]))
            trace.append(TraceEvent("syntactic:va", "restore-conjunction",
                                    segments[s2 + 1].src[0] if segments[s2 + 1].src else -1,
                                    f"{c1} {c2}", f"{c1} و {c2}"))
            return

    def _is_present_indicative(self, core: str) -> bool:
        entry = self.cfg.verbs.get(core)
        if entry and entry.has("present"):
            return True
        return core.startswith("می" + ZWNJ) or core.startswith("نمی" + ZWNJ)

    def _insert_agar(self, segments: list[Segment], trace: list[TraceEvent]) -> None:
        """Restore the dropped conditional marker: clause 1 opens with a
        subjunctive verb, clause 2 is present indicative. The subjunctive verb
        moves to clause-final position and gains the clause comma."""
        if not segments:
            return
        head = self._single_core(segments[0])
        if not head:
            return
        entry = self.cfg.verbs.get(head)
        if not entry or not entry.has("subjunctive"):
            return
        k = 1
        while k < len(segments):
            core = self._single_core(segments[k])
            if core == "به" or (core and core in self.cfg.destinations):
                k += 1
            else:
                break
        if k == 1:
            return  # no complement material: not the dropped-conditional shape
        rest = segments[k:]
        if not any(self._is_present_indicative(t.core) for s in rest for t in s.toks):
            return
        verb_seg = segments.pop(0)
        verb_seg.toks[-1].post += "،"
        segments.insert(k - 1, verb_seg)
        segments.insert(0, Segment(None, [OutTok("اگر")]))
        trace.append(TraceEvent("syntactic:agar", "restore-conditional",
                                verb_seg.src[0] if verb_seg.src else -1, head, f"اگر … {head}،"))

    def _final_clause_start(self, segments: list[Segment]) -> int:
        start = 0
        for i, seg in enumerate(segments):
            for tok in seg.toks:
                if any(c in CLAUSE_PUNCT for c in tok.post):
                    start = i + 1
        return start

    def _verb_final(self, segments: list[Segment], trace: list[TraceEvent]) -> None:
        """Standardize the final clause to subject-first, verb-last order."""
        start = self._final_clause_start(segments)
        clause = segments[start:]
        real = [s for s in clause if s.toks]
        if len(real) < 2:
            return

        # a trailing bare subject pronoun moves to the clause front
        last = real[-1]
        c_last = self._single_core(last)
        if c_last and c_last in self.cfg.pronouns:
            before_last = [t.core for s in real[:-1] for t in s.toks]
            if any(self.cfg.is_verb(c) for c in before_last):
                segments.remove(last)
                segments.insert(start, last)
                trace.append(TraceEvent("syntactic:order", "front-subject",
                                        last.src[0] if last.src else -1, c_last, c_last))
                clause = segments[start:]
                real = [s for s in clause if s.toks]

        # a clause that already ends in a verb counts as standardized;
        # otherwise the first verb moves to the clause end
        cores = [t.core for s in real for t in s.toks if t.core]
        if not cores or self.cfg.is_verb(cores[-1]):
            return
        for pos, seg in enumerate(real[:-1]):
            core = self._single_core(seg)
            if core and self.cfg.is_verb(core):
                segments.remove(seg)
                segments.append(seg)
                trace.append(TraceEvent("syntactic:order", "verb-final",
                                        seg.src[0] if seg.src else -1, core, core))
                break

    def _causative(self, segments: list[Segment], trace: list[TraceEvent]) -> None:
        """Replace informal causative verb forms with the plain transitive."""
        for seg in segments:
            for tok in seg.toks:
                entry = self.cfg.verbs.get(tok.core)
                if entry and entry.causative_of:
                    before = tok.core
                    tok.core = entry.causative_of
                    trace.append(TraceEvent("syntactic:causative", "decausativize",
                                            seg.src[0] if seg.src else -1,
                                            before, entry.causative_of))

    # -- links ---------------------------------------------------------------

    def _links(self, segments: list[Segment], n_informal: int) -> list[AlignmentLink]:
        links: list[AlignmentLink] = []
        cursor = 0
        spans: list[tuple[Segment, tuple[int, int]]] = []
        for seg in segments:
            n_out = sum(1 for t in seg.toks if t.surface)
            spans.append((seg, (cursor, cursor + n_out)))
            cursor += n_out
        for i, (seg, formal_span) in enumerate(spans):
            if seg.src is not None:
                links.append(AlignmentLink(seg.src, formal_span))
            else:
                following = [s.src[0] for s, _ in spans[i + 1:] if s.src is not None]
                if following:
                    anchor = min(following)
                else:
                    preceding = [s.src[1] for s, _ in spans[:i] if s.src is not None]
                    anchor = max(preceding) if preceding else 0
                links.append(AlignmentLink((anchor, anchor), formal_span))
        return links


def apply_syntactic(tokens: list[str], verbs: VerbLexicon,
                    cfg: ConverterConfig) -> tuple[list[str], list[AlignmentLink], list[TraceEvent]]:
    """Run only the syntactic transforms over plain token surfaces."""
    work_cfg = cfg
    if verbs is not cfg.verbs:
        from dataclasses import replace
        work_cfg = replace(cfg, verbs=verbs)
    conv = Converter(work_cfg)
    segments = []
    for i, surface in enumerate(tokens):
        pre, core, post = split_punct(surface)
        segments.append(Segment((i, i + 1), [OutTok(core, pre, post)]))
    trace: list[TraceEvent] = []
    conv._syntactic_stage(segments, trace)
    out = [t.surface for s in segments for t in s.toks if t.surface]
    return out, conv._links(segments, len(tokens)), trace


_default_converter: Converter | None = None


def convert(informal: str, config: ConverterConfig | None = None) -> ConversionResult:
    """Convert one informal sentence with the shipped default resources."""
    global _default_converter
    if config is not None:
        return Converter(config).convert(informal)
    if _default_converter is None:
        from rasmi.resources import default_config
        _default_converter = Converter(default_config())
    return _default_converter.convert(informal)
