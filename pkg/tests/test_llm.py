import json

import httpx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lintcomp.llm import (
    CacheMiss, CompletionRequest, Gateway, GatewaySettings, HashingEmbedder, HttpBackend,
    MissingSlot, PromptTemplate, ProviderError, ReplayCache, ScriptedBackend, TransportError,
    cosine, render, request_key,
)


def req(text="hello", **kw):
    return CompletionRequest.user(text, **kw)


def test_request_defaults():
    r = req()
    assert r.temperature == 0.0
    with pytest.raises(ValueError):
        CompletionRequest(())
    with pytest.raises(ValueError):
        CompletionRequest((("robot", "x"),))


def test_key_ignores_trailing_whitespace_and_tag():
    a = req("line one\nline two")
    b = req("line one   \nline two\n\n", tag="stage1:x")
    assert request_key(a) == request_key(b)


def test_key_changes_with_temperature_and_model():
    base = request_key(req())
    assert request_key(req(temperature=0.7)) != base
    assert request_key(req(model_id="other-model")) != base
    assert request_key(req("hello!")) != base


def test_replay_identical_and_miss():
    cache = ReplayCache()
    gw = Gateway(mode="replay", cache=cache)
    cache.put(request_key(req()), "world")
    assert gw.complete(req()) == gw.complete(req()) == "world"
    with pytest.raises(CacheMiss):
        gw.complete(req("absent"))


def test_record_then_replay_round_trip(tmp_path):
    path = tmp_path / "cache.jsonl"
    backend = ScriptedBackend({"t": "réponse\n  with spacing  "})
    rec = Gateway(mode="record", backend=backend, cache=ReplayCache(path))
    out = rec.complete(req(tag="t"))
    line = json.loads(path.read_text(encoding="utf-8").splitlines()[0])
    assert set(line) == {"key", "request_digest", "response_text", "recorded_at"}
    replay = Gateway(mode="replay", cache=ReplayCache(path))
    assert replay.complete(req()).encode() == out.encode()


def test_cache_put_same_text_does_not_append(tmp_path):
    path = tmp_path / "c.jsonl"
    cache = ReplayCache(path, clock=lambda: "2026-01-01T00:00:00Z")
    cache.put("k", "v")
    cache.put("k", "v")
    assert len(path.read_text().splitlines()) == 1
    cache.put("k", "w")
    assert ReplayCache(path).get("k").response_text == "w"


def test_live_mode_does_not_touch_cache():
    cache = ReplayCache()
    gw = Gateway(mode="live", backend=ScriptedBackend({}, default="x"), cache=cache)
    assert gw.complete(req()) == "x"
    assert len(cache) == 0


def test_mode_validation():
    with pytest.raises(ValueError):
        Gateway(mode="offline")
    with pytest.raises(ValueError):
        Gateway(mode="record")


def test_scripted_profile_override():
    b = ScriptedBackend({"s": "base", "ablate/s": "override"}, profile="ablate")
    assert b.complete(req(tag="s")) == "override"
    assert ScriptedBackend({"s": "base"}, profile="ablate").complete(req(tag="s")) == "base"


def test_embed_replay_and_self_similarity(tmp_path):
    path = tmp_path / "e.jsonl"
    rec = Gateway(mode="record", backend=ScriptedBackend({}), cache=ReplayCache(path))
    v = rec.embed("Checks for braces around code blocks.")
    again = Gateway(mode="replay", cache=ReplayCache(path)).embed("Checks for braces around code blocks.")
    assert np.array_equal(v, again)
    assert abs(cosine(v, v) - 1.0) < 1e-9
    with pytest.raises(ValueError):
        rec.embed("   ")


@given(st.text(min_size=1).filter(str.strip))
@settings(max_examples=100, deadline=None)
def test_hashing_embedder_unit_norm(text):
    v = HashingEmbedder().vector(text)
    assert abs(cosine(v, v) - 1.0) < 1e-9


def test_embedder_relates_camel_case_to_words():
    e = HashingEmbedder()
    assert cosine(e.vector("NeedBraces"), e.vector("need braces")) > 0.99


def _transport(responses):
    calls = []

    def handler(request):
        calls.append(json.loads(request.content))
        item = responses[min(len(calls) - 1, len(responses) - 1)]
        if isinstance(item, Exception):
            raise item
        status, body = item
        return httpx.Response(status, json=body)

    return httpx.MockTransport(handler), calls


def _backend(transport, **kw):
    return HttpBackend("https://llm.test/v1", "key", client=httpx.Client(transport=transport),
                       sleep=lambda s: None, **kw)


def test_http_complete_payload():
    transport, calls = _transport([(200, {"choices": [{"message": {"content": "ok"}}]})])
    out = _backend(transport).complete(req(max_tokens=10))
    assert out == "ok"
    assert calls[0] == {"model": "gpt-4o", "messages": [{"role": "user", "content": "hello"}],
                        "temperature": 0.0, "max_tokens": 10}


def test_http_retries_then_succeeds():
    transport, calls = _transport([httpx.ConnectError("down"), (503, {"error": "busy"}),
                                   (200, {"choices": [{"message": {"content": "ok"}}]})])
    assert _backend(transport).complete(req()) == "ok"
    assert len(calls) == 3


def test_http_retry_exhaustion():
    transport, calls = _transport([httpx.ConnectError("down")])
    with pytest.raises(TransportError) as info:
        _backend(transport, max_retries=3).complete(req())
    assert info.value.attempts == 4 and len(calls) == 4


def test_http_provider_error_passthrough():
    transport, calls = _transport([(401, {"error": "bad key"})])
    with pytest.raises(ProviderError) as info:
        _backend(transport).complete(req())
    assert info.value.status == 401 and len(calls) == 1


def test_http_embed():
    transport, _ = _transport([(200, {"data": [{"embedding": [0.6, 0.8]}]})])
    assert _backend(transport).embed("x", "m") == [0.6, 0.8]


def test_settings_from_env():
    s = GatewaySettings.from_env({"LINTCOMP_API_KEY": "k", "LINTCOMP_MODEL": "m"})
    assert (s.api_key, s.model_id) == ("k", "m")
    assert GatewaySettings.from_env({"OPENAI_API_KEY": "o"}).api_key == "o"


def test_map_preserves_order():
    gw = Gateway(mode="live", backend=ScriptedBackend({}, default=""), parallelism=4)
    assert gw.map(lambda x: x * x, range(20)) == [x * x for x in range(20)]


def test_history_kept_when_asked():
    gw = Gateway(mode="live", backend=ScriptedBackend({}, default="r"), keep_history=True)
    gw.ask("q", tag="t")
    assert [r.tag for r in gw.history] == ["t"]


# templates

def test_render_simple():
    assert render(PromptTemplate("t", "A <x> B"), {"x": "1"}) == "A 1 B"


def test_render_missing_slot():
    with pytest.raises(MissingSlot) as info:
        render(PromptTemplate("t", "A <x> <y>"), {"y": "2"})
    assert info.value.slot == "x"


def test_template_marker_slot_consistency():
    with pytest.raises(ValueError):
        PromptTemplate("t", "A <x>", slots=("y",))
    with pytest.raises(ValueError):
        PromptTemplate("t", "A <x>", slots=("x", "z"))


def test_render_does_not_expand_markers_in_values():
    tpl = PromptTemplate("t", "<a>|<b>")
    assert render(tpl, {"a": "<b>", "b": "2"}) == "<b>|2"


def _esc(s):
    return s.replace("\\", "\\\\").replace("|", "\\|")


@given(st.tuples(st.text(), st.text()), st.tuples(st.text(), st.text()))
@settings(max_examples=300)
def test_render_injective_with_escaped_values(b1, b2):
    tpl = PromptTemplate("t", "<a>|<b>")
    out1 = render(tpl, {"a": _esc(b1[0]), "b": _esc(b1[1])})
    out2 = render(tpl, {"a": _esc(b2[0]), "b": _esc(b2[1])})
    assert (out1 == out2) == (b1 == b2)


def test_template_digest_stable():
    assert PromptTemplate("t", "x <a>").digest == PromptTemplate("t", "x <a>").digest
    assert PromptTemplate("t", "x <a>").digest != PromptTemplate("t", "y <a>").digest
