"""Tweet text cleaning: character normalization, noise removal, tokenization,
stopword filtering, suffix stemming and conservative spell correction.

All functions are pure; a :class:`PreprocessConfig` is immutable once built, so
the whole pipeline is safe to share across threads.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

import regex

from .errors import ConfigError, FormatError

# Arabic presentation forms -> canonical Persian codepoints. Targets must never
# appear as keys, otherwise normalize_chars would not be idempotent.
_CHAR_MAP = {
    "ي": "ی",  # Arabic yeh -> Farsi yeh
    "ى": "ی",  # alef maksura -> Farsi yeh
    "ك": "ک",  # Arabic kaf -> keheh
    "ة": "ه",  # teh marbuta -> heh
    "أ": "ا",  # alef with hamza above -> alef
    "إ": "ا",  # alef with hamza below -> alef
    "ٱ": "ا",  # alef wasla -> alef
}
# Arabic-Indic digits -> Extended Arabic-Indic (the family Persian text uses).
_CHAR_MAP.update({chr(0x0660 + i): chr(0x06F0 + i) for i in range(10)})
# Tatweel and Arabic harakat carry no lexical content in tweets.
_STRIP_CHARS = "ـ" + "".join(chr(c) for c in range(0x064B, 0x0653))

_TRANSLATION = str.maketrans(
    {**_CHAR_MAP, **{ch: None for ch in _STRIP_CHARS}}
)

_TAG_RE = regex.compile(r"<[^>]*>")
_URL_RE = regex.compile(r"\bhttps?://\S+|\bwww\.\S+", regex.IGNORECASE)
_RUN_RE = regex.compile(r"(\X)\1{2,}")
_TOKEN_RE = regex.compile(r"[^\s\p{P}]+")
_MULTISPACE_RE = regex.compile(r" {2,}")

# Codepoint ranges treated as emoji when no replacement is configured.
_EMOJI_CLASS = (
    "[☀-➿⬀-⯿️" "\U0001f000-\U0001faff]"
)
_EMOJI_RE = regex.compile(f"{_EMOJI_CLASS}(?:‍?{_EMOJI_CLASS})*")

STEP_NAMES = (
    "normalize_chars",
    "strip_html_urls",
    "replace_emojis",
    "collapse_repeats",
    "remove_stopwords",
    "stem",
    "correct_spelling",
)


def normalize_chars(text: str) -> str:
    """Map Arabic presentation characters and digits to canonical Persian forms."""
    return text.translate(_TRANSLATION)


def strip_html_urls(text: str) -> str:
    """Delete ``<...>`` markup and http(s)/www URLs, keeping surrounding text."""
    return _URL_RE.sub("", _TAG_RE.sub("", text))


def collapse_repeats(text: str) -> str:
    """Reduce any in-word run of three or more identical graphemes to one."""

    def _squash(match: regex.Match) -> str:
        unit = match.group(1)
        return match.group(0) if unit.isspace() else unit

    return _RUN_RE.sub(_squash, text)


def replace_emojis(text: str, emoji_map: Mapping[str, str]) -> str:
    """Swap mapped emojis for their textual equivalent; drop unmapped emojis.

    Replacements are padded with single spaces so they tokenize as separate
    words; the result is re-tightened to single spaces and trimmed.
    """
    if emoji_map:
        keys = sorted(emoji_map, key=len, reverse=True)
        mapped = regex.compile("|".join(regex.escape(k) for k in keys))
        text = mapped.sub(lambda m: f" {emoji_map[m.group(0)]} ", text)
    text = _EMOJI_RE.sub("", text)
    return _MULTISPACE_RE.sub(" ", text).strip()


def tokenize(text: str) -> list[str]:
    """Split on whitespace and Unicode punctuation.

    ZWNJ survives inside tokens (it is word-internal in Persian); a hashtag's
    ``#`` is punctuation and falls away while its body remains a token.
    """
    tokens = (t.strip("‌‍") for t in _TOKEN_RE.findall(text))
    return [t for t in tokens if t]


def remove_stopwords(tokens: Iterable[str], stopwords: frozenset[str] | set[str]) -> list[str]:
    return [t for t in tokens if t not in stopwords]


def stem(token: str, stem_rules: Iterable[tuple[str, str]]) -> str:
    """Apply the first suffix rule that matches without emptying the token."""
    for suffix, replacement in stem_rules:
        if token.endswith(suffix):
            candidate = token[: len(token) - len(suffix)] + replacement
            if candidate:
                return candidate
    return token


def _within_edit1(a: str, b: str) -> bool:
    la, lb = len(a), len(b)
    if abs(la - lb) > 1:
        return False
    if la == lb:
        return sum(x != y for x, y in zip(a, b)) <= 1
    if la > lb:
        a, b, la, lb = b, a, lb, la
    # one insertion turns a into b
    i = 0
    while i < la and a[i] == b[i]:
        i += 1
    return a[i:] == b[i + 1 :]


def correct_spelling(token: str, dictionary: frozenset[str] | None) -> str:
    """Replace a misspelled token only when exactly one dictionary word is at
    edit distance 1; ties and no-match leave the token untouched."""
    if not dictionary or token in dictionary:
        return token
    matches = [w for w in dictionary if _within_edit1(token, w)]
    if len(matches) == 1:
        return matches[0]
    return token


@dataclass(frozen=True)
class PreprocessConfig:
    """Immutable resources and step toggles for the cleaning pipeline."""

    stopwords: frozenset[str] = frozenset()
    emoji_map: Mapping[str, str] = field(default_factory=dict)
    stem_rules: tuple[tuple[str, str], ...] = ()
    dictionary: frozenset[str] | None = None
    steps: tuple[str, ...] = STEP_NAMES

    def __post_init__(self):
        seen = set()
        for step in self.steps:
            if step in seen:
                raise ConfigError(f"duplicate preprocessing step: {step}")
            if step not in STEP_NAMES and step != "tokenize":
                raise ConfigError(f"unknown preprocessing step: {step}")
            seen.add(step)
        for key in self.emoji_map:
            if regex.fullmatch(r"\X", key) is None:
                raise ConfigError(
                    f"emoji map key is not a single grapheme cluster: {key!r}"
                )


def preprocess(doc, cfg: PreprocessConfig) -> list[str]:
    """Run the enabled cleaning steps in their fixed order and tokenize.

    ``doc`` may be a raw string or any object with a ``text`` attribute.
    """
    text = doc.text if hasattr(doc, "text") else doc
    enabled = set(cfg.steps)
    if "normalize_chars" in enabled:
        text = normalize_chars(text)
    if "strip_html_urls" in enabled:
        text = strip_html_urls(text)
    if "replace_emojis" in enabled:
        text = replace_emojis(text, cfg.emoji_map)
    if "collapse_repeats" in enabled:
        text = collapse_repeats(text)
    tokens = tokenize(text)
    if "remove_stopwords" in enabled:
        tokens = remove_stopwords(tokens, cfg.stopwords)
    if "stem" in enabled:
        tokens = [stem(t, cfg.stem_rules) for t in tokens]
    if "correct_spelling" in enabled:
        tokens = [correct_spelling(t, cfg.dictionary) for t in tokens]
    return tokens


def load_stopwords(path) -> frozenset[str]:
    """One token per line; ``#``-prefixed lines are comments."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


def load_emoji_map(path) -> dict[str, str]:
    """TSV of ``emoji<TAB>replacement`` rows."""
    mapping = {}
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise FormatError(f"{path}:{lineno}: expected emoji<TAB>replacement")
        emoji, replacement = parts
        if regex.fullmatch(r"\X", emoji) is None:
            raise FormatError(
                f"{path}:{lineno}: key is not a single grapheme cluster"
            )
        mapping[emoji] = replacement.strip()
    return mapping


def load_stem_rules(path) -> tuple[tuple[str, str], ...]:
    """TSV of ``suffix<TAB>replacement``; longest suffixes are tried first.

    A line without a tab declares a bare suffix with empty replacement.
    """
    rules = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) == 1:
            rules.append((parts[0], ""))
        elif len(parts) == 2:
            rules.append((parts[0], parts[1]))
        else:
            raise FormatError(f"{path}:{lineno}: expected suffix<TAB>replacement")
    rules.sort(key=lambda r: -len(r[0]))
    return tuple(rules)


def load_dictionary(path) -> frozenset[str]:
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line:
            words.add(line)
    return frozenset(words)


def default_config() -> PreprocessConfig:
    """Config backed by the resource files shipped with the package."""
    root = Path(__file__).parent / "resources"
    return PreprocessConfig(
        stopwords=load_stopwords(root / "stopwords_fa.txt"),
        emoji_map=load_emoji_map(root / "emoji_map.tsv"),
        stem_rules=load_stem_rules(root / "stem_rules.tsv"),
        dictionary=None,
    )
