"""Chat-completion and embedding access with a record/replay cache.

Three modes:

* ``live`` sends every request to the backend.
* ``record`` sends to the backend and appends the answer to the cache file.
* ``replay`` answers only from the cache and raises :class:`CacheMiss` otherwise.

The cache key is a SHA-256 over a canonical JSON form of the request, so it
does not depend on dict ordering or on whitespace at line ends. The ``tag`` on
a request is routing metadata for scripted backends and logs, and is not part
of the key.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import re
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable, Iterable, Mapping, Protocol, Sequence, TypeVar

import httpx
import numpy as np

log = logging.getLogger(__name__)

MODES = ("live", "record", "replay")
ROLES = ("system", "user", "assistant")
DEFAULT_MODEL = "gpt-4o"
DEFAULT_EMBED_MODEL = "text-embedding-3-small"
DEFAULT_BASE_URL = "https://api.openai.com/v1"
DEFAULT_MAX_TOKENS = 4096
DEFAULT_PARALLELISM = 4
RETRY_STATUS = frozenset({408, 409, 429, 500, 502, 503, 504})

T = TypeVar("T")
R = TypeVar("R")


class LlmError(Exception):
    pass


class CacheMiss(LlmError, KeyError):
    def __init__(self, key: str, tag: str = ""):
        super().__init__(f"no cached response for {tag or 'request'} (key {key[:12]})")
        self.key = key
        self.tag = tag

    def __str__(self) -> str:
        return self.args[0]


class TransportError(LlmError):
    def __init__(self, message: str, attempts: int):
        super().__init__(f"{message} (after {attempts} attempts)")
        self.attempts = attempts


class ProviderError(LlmError):
    def __init__(self, status: int, body: str):
        super().__init__(f"provider returned HTTP {status}: {body[:200]}")
        self.status = status
        self.body = body


class LlmFormatError(LlmError):
    """A response could not be parsed into the shape the caller asked for."""


class MissingSlot(LlmError, KeyError):
    def __init__(self, slot: str):
        super().__init__(slot)
        self.slot = slot

    def __str__(self) -> str:
        return f"unbound template slot <{self.slot}>"


# ---------------------------------------------------------------------------
# Requests and keys
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CompletionRequest:
    prompt_parts: tuple[tuple[str, str], ...]
    model_id: str = DEFAULT_MODEL
    temperature: float = 0.0
    max_tokens: int = DEFAULT_MAX_TOKENS
    tag: str = ""

    def __post_init__(self) -> None:
        parts = tuple((str(r), str(t)) for r, t in self.prompt_parts)
        if not parts:
            raise ValueError("prompt_parts must be nonempty")
        for role, _ in parts:
            if role not in ROLES:
                raise ValueError(f"unknown role {role!r}")
        if self.max_tokens <= 0:
            raise ValueError("max_tokens must be positive")
        object.__setattr__(self, "prompt_parts", parts)
        object.__setattr__(self, "temperature", float(self.temperature))

    @classmethod
    def user(cls, text: str, **kw: Any) -> "CompletionRequest":
        return cls((("user", text),), **kw)

    @property
    def prompt_text(self) -> str:
        return "\n\n".join(t for _, t in self.prompt_parts)


def _norm_text(text: str) -> str:
    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    return "\n".join(line.rstrip() for line in lines).strip()


def _canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def canonical_request(req: CompletionRequest) -> dict:
    return {
        "kind": "chat",
        "model_id": req.model_id,
        "temperature": req.temperature,
        "max_tokens": req.max_tokens,
        "messages": [{"role": r, "content": _norm_text(t)} for r, t in req.prompt_parts],
    }


def _sha(obj: Any) -> str:
    return hashlib.sha256(_canonical_json(obj).encode("utf-8")).hexdigest()


def request_key(req: CompletionRequest) -> str:
    return _sha(canonical_request(req))


def embed_key(text: str, model_id: str) -> str:
    return _sha({"kind": "embed", "model_id": model_id, "input": _norm_text(text)})


# ---------------------------------------------------------------------------
# Replay cache
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReplayCacheEntry:
    key: str
    response_text: str
    recorded_at: str
    request_digest: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps({
            "key": self.key,
            "request_digest": self.request_digest,
            "response_text": self.response_text,
            "recorded_at": self.recorded_at,
        }, sort_keys=True, ensure_ascii=False)


def _utc_now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


class ReplayCache:
    """JSON-lines cache; later lines win when a key repeats."""

    def __init__(self, path: str | Path | None = None, clock: Callable[[], str] = _utc_now):
        self.path = Path(path) if path is not None else None
        self.clock = clock
        self._entries: dict[str, ReplayCacheEntry] = {}
        self._lock = threading.Lock()
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    raw = json.loads(line)
                    entry = ReplayCacheEntry(raw["key"], raw["response_text"], raw["recorded_at"],
                                             raw.get("request_digest", {}))
                except (json.JSONDecodeError, KeyError, TypeError) as exc:
                    raise LlmError(f"{self.path}:{lineno}: bad cache line ({exc})") from exc
                self._entries[entry.key] = entry

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: str) -> bool:
        return key in self._entries

    def entries(self) -> list[ReplayCacheEntry]:
        return list(self._entries.values())

    def get(self, key: str) -> ReplayCacheEntry | None:
        return self._entries.get(key)

    def put(self, key: str, response_text: str, digest: dict | None = None) -> ReplayCacheEntry:
        entry = ReplayCacheEntry(key, response_text, self.clock(), digest or {})
        with self._lock:
            old = self._entries.get(key)
            if old is not None and old.response_text == response_text:
                return old
            self._entries[key] = entry
            if self.path is not None:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(entry.to_json() + "\n")
        return entry


# ---------------------------------------------------------------------------
# Backends
# ---------------------------------------------------------------------------

class Backend(Protocol):
    def complete(self, req: CompletionRequest) -> str: ...

    def embed(self, text: str, model_id: str) -> list[float]: ...


@dataclass(frozen=True)
class GatewaySettings:
    api_key: str | None = None
    base_url: str = DEFAULT_BASE_URL
    model_id: str = DEFAULT_MODEL
    embed_model_id: str = DEFAULT_EMBED_MODEL

    @classmethod
    def from_env(cls, env: Mapping[str, str] | None = None) -> "GatewaySettings":
        env = os.environ if env is None else env
        return cls(
            api_key=env.get("LINTCOMP_API_KEY") or env.get("OPENAI_API_KEY"),
            base_url=env.get("LINTCOMP_BASE_URL", DEFAULT_BASE_URL),
            model_id=env.get("LINTCOMP_MODEL", DEFAULT_MODEL),
            embed_model_id=env.get("LINTCOMP_EMBED_MODEL", DEFAULT_EMBED_MODEL),
        )


class HttpBackend:
    """OpenAI-compatible ``/chat/completions`` and ``/embeddings`` client."""

    def __init__(
        self,
        base_url: str = DEFAULT_BASE_URL,
        api_key: str | None = None,
        *,
        client: httpx.Client | None = None,
        max_retries: int = 3,
        backoff: float = 1.0,
        timeout: float = 120.0,
        sleep: Callable[[float], None] = time.sleep,
    ):
        headers = {"Authorization": f"Bearer {api_key}"} if api_key else {}
        self.client = client or httpx.Client(timeout=timeout)
        self.base_url = base_url.rstrip("/")
        self.headers = headers
        self.max_retries = max_retries
        self.backoff = backoff
        self.sleep = sleep

    def _post(self, path: str, payload: dict) -> dict:
        url = f"{self.base_url}/{path}"
        last: Exception | None = None
        attempts = self.max_retries + 1
        for attempt in range(attempts):
            if attempt:
                self.sleep(self.backoff * 2 ** (attempt - 1))
            try:
                resp = self.client.post(url, json=payload, headers=self.headers)
            except httpx.TransportError as exc:
                last = exc
                continue
            if resp.status_code in RETRY_STATUS:
                last = ProviderError(resp.status_code, resp.text)
                continue
            if resp.status_code >= 400:
                raise ProviderError(resp.status_code, resp.text)
            try:
                return resp.json()
            except ValueError as exc:
                raise ProviderError(resp.status_code, f"non-JSON body: {resp.text}") from exc
        if isinstance(last, ProviderError):
            raise last
        raise TransportError(f"POST {url} failed: {last}", attempts) from last

    def complete(self, req: CompletionRequest) -> str:
        data = self._post("chat/completions", {
            "model": req.model_id,
            "messages": [{"role": r, "content": t} for r, t in req.prompt_parts],
            "temperature": req.temperature,
            "max_tokens": req.max_tokens,
        })
        try:
            return data["choices"][0]["message"]["content"] or ""
        except (KeyError, IndexError, TypeError) as exc:
            raise ProviderError(200, f"unexpected completion payload: {data!r}") from exc

    def embed(self, text: str, model_id: str) -> list[float]:
        data = self._post("embeddings", {"model": model_id, "input": text})
        try:
            return [float(x) for x in data["data"][0]["embedding"]]
        except (KeyError, IndexError, TypeError) as exc:
            raise ProviderError(200, f"unexpected embedding payload: {data!r}") from exc


_TOKEN = re.compile(r"[A-Z]+(?![a-z])|[A-Z]?[a-z]+|\d+")


class HashingEmbedder:
    """Offline bag-of-words embedder using signed feature hashing.

    Identifiers are split on camel case, so ``NeedBraces`` and "need braces"
    land on the same features.
    """

    def __init__(self, dim: int = 256):
        self.dim = dim

    def vector(self, text: str) -> list[float]:
        tokens = [t.lower() for t in _TOKEN.findall(text)] or [text.strip().lower()]
        vec = np.zeros(self.dim)
        for tok in tokens:
            h = int.from_bytes(hashlib.blake2b(tok.encode("utf-8"), digest_size=8).digest(), "big")
            vec[h % self.dim] += 1.0 if (h >> 32) & 1 else -1.0
        norm = np.linalg.norm(vec)
        if norm == 0:
            # every token cancelled out; fall back to a one-hot on the whole text
            h = int.from_bytes(hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest(), "big")
            vec[h % self.dim] = 1.0
            norm = 1.0
        return (vec / norm).tolist()

    def embed(self, text: str, model_id: str) -> list[float]:
        return self.vector(text)


class ScriptedBackend:
    """Answers from a script keyed by request tag, for fixtures and tests.

    ``script`` maps a tag to a response, or is a callable taking the request.
    With ``profile`` set, ``"<profile>/<tag>"`` takes precedence over the bare tag.
    """

    def __init__(
        self,
        script: Mapping[str, str] | Callable[[CompletionRequest], str],
        *,
        profile: str = "",
        default: str | None = None,
        embedder: HashingEmbedder | None = None,
    ):
        self.script = script
        self.profile = profile
        self.default = default
        self.embedder = embedder or HashingEmbedder()

    def complete(self, req: CompletionRequest) -> str:
        if callable(self.script):
            return self.script(req)
        for tag in (f"{self.profile}/{req.tag}" if self.profile else None, req.tag):
            if tag is not None and tag in self.script:
                return self.script[tag]
        if self.default is not None:
            return self.default
        raise LlmError(f"no scripted response for tag {req.tag!r}")

    def embed(self, text: str, model_id: str) -> list[float]:
        return self.embedder.embed(text, model_id)


# ---------------------------------------------------------------------------
# Gateway
# ---------------------------------------------------------------------------

class Gateway:
    def __init__(
        self,
        *,
        mode: str = "replay",
        backend: Backend | None = None,
        cache: ReplayCache | None = None,
        model_id: str = DEFAULT_MODEL,
        embed_model_id: str = DEFAULT_EMBED_MODEL,
        parallelism: int = DEFAULT_PARALLELISM,
        max_tokens: int = DEFAULT_MAX_TOKENS,
        keep_history: bool = False,
    ):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, not {mode!r}")
        if mode in ("live", "record") and backend is None:
            raise ValueError(f"{mode} mode needs a backend")
        if mode in ("record", "replay") and cache is None:
            cache = ReplayCache()
        if parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        self.mode = mode
        self.backend = backend
        self.cache = cache
        self.model_id = model_id
        self.embed_model_id = embed_model_id
        self.parallelism = parallelism
        self.max_tokens = max_tokens
        self.keep_history = keep_history
        self.history: list[CompletionRequest] = []
        self._history_lock = threading.Lock()

    @classmethod
    def from_settings(cls, settings: GatewaySettings, *, mode: str, cache: ReplayCache | None = None,
                      **kw: Any) -> "Gateway":
        backend = HttpBackend(settings.base_url, settings.api_key) if mode != "replay" else None
        return cls(mode=mode, backend=backend, cache=cache, model_id=settings.model_id,
                   embed_model_id=settings.embed_model_id, **kw)

    def request(self, text: str, *, tag: str = "", system: str | None = None) -> CompletionRequest:
        parts = ((("system", system),) if system else ()) + (("user", text),)
        return CompletionRequest(parts, model_id=self.model_id, max_tokens=self.max_tokens, tag=tag)

    def ask(self, text: str, *, tag: str = "", system: str | None = None) -> str:
        return self.complete(self.request(text, tag=tag, system=system))

    def ask_parsed(
        self,
        text: str,
        parse: Callable[[str], T],
        *,
        tag: str = "",
        repair: Callable[[str], str],
        fallback: Callable[[str], T] | None = None,
    ) -> tuple[T, str]:
        """Ask, parse, and on a parse failure re-prompt once with the error.

        ``parse`` raises ValueError (LlmFormatError or a DSL error) on bad
        output. ``repair`` renders the follow-up message from the error text.
        When the repaired answer fails too, ``fallback`` (if given) salvages
        what it can; otherwise LlmFormatError is raised. Returns the parsed
        value and the raw text it came from.
        """
        first = self.ask(text, tag=tag)
        try:
            return parse(first), first
        except (LlmFormatError, ValueError) as exc:
            error = str(exc)
        req = CompletionRequest(
            (("user", text), ("assistant", first), ("user", repair(error))),
            model_id=self.model_id, max_tokens=self.max_tokens, tag=f"{tag}#repair",
        )
        second = self.complete(req)
        try:
            return parse(second), second
        except (LlmFormatError, ValueError) as exc:
            if fallback is not None:
                log.warning("%s: keeping partial answer after repair (%s)", tag, exc)
                return fallback(second), second
            raise LlmFormatError(f"{tag}: unusable answer after one repair: {exc}") from exc

    def complete(self, req: CompletionRequest) -> str:
        if self.keep_history:
            with self._history_lock:
                self.history.append(req)
        key = request_key(req)
        digest = {"tag": req.tag, "model_id": req.model_id, "prompt_chars": len(req.prompt_text)}
        return self._resolve(key, req.tag, digest, lambda: self.backend.complete(req))

    def embed(self, text: str) -> np.ndarray:
        if not text or not text.strip():
            raise ValueError("cannot embed blank text")
        key = embed_key(text, self.embed_model_id)
        digest = {"tag": "embed", "model_id": self.embed_model_id, "prompt_chars": len(text)}
        raw = self._resolve(key, "embed", digest,
                            lambda: json.dumps(self.backend.embed(text, self.embed_model_id)))
        return np.asarray(json.loads(raw), dtype=float)

    def _resolve(self, key: str, tag: str, digest: dict, call: Callable[[], str]) -> str:
        if self.mode == "replay":
            entry = self.cache.get(key)
            if entry is None:
                raise CacheMiss(key, tag)
            return entry.response_text
        text = call()
        if self.mode == "record":
            self.cache.put(key, text, digest)
        return text

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """Apply ``fn`` to each item with at most ``parallelism`` in flight; order kept."""
        items = list(items)
        if self.parallelism == 1 or len(items) <= 1:
            return [fn(x) for x in items]
        with ThreadPoolExecutor(max_workers=self.parallelism) as pool:
            return list(pool.map(fn, items))


def cosine(a: Sequence[float], b: Sequence[float]) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    denom = np.linalg.norm(a) * np.linalg.norm(b)
    return float(a @ b / denom) if denom else 0.0


# ---------------------------------------------------------------------------
# Prompt templates
# ---------------------------------------------------------------------------

_MARKER = re.compile(r"<([a-z][a-z0-9_]*)>")


@dataclass(frozen=True)
class PromptTemplate:
    name: str
    body: str
    slots: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        found = list(dict.fromkeys(_MARKER.findall(self.body)))
        slots = tuple(self.slots) or tuple(found)
        unknown = [m for m in found if m not in slots]
        if unknown:
            raise ValueError(f"template {self.name}: markers not declared as slots: {unknown}")
        unused = [s for s in slots if s not in found]
        if unused:
            raise ValueError(f"template {self.name}: slots without markers: {unused}")
        object.__setattr__(self, "slots", slots)

    @property
    def digest(self) -> str:
        return hashlib.sha256(f"{self.name}\0{self.body}".encode("utf-8")).hexdigest()[:16]


def render(tpl: PromptTemplate, bindings: Mapping[str, str]) -> str:
    for slot in tpl.slots:
        if slot not in bindings:
            raise MissingSlot(slot)
    # single pass, so marker-like text inside bound values is never expanded
    return _MARKER.sub(lambda m: str(bindings[m.group(1)]), tpl.body)
