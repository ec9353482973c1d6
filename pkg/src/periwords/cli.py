"""Command-line frontend: generate words, profile, factorize, verify, batch.

Exit codes: 0 when everything requested passed (windowed-pass counts, with a
warning on stderr), 2 when a verification failed, 3 when the only non-passes
were inconclusive, 1 for usage/descriptor/output/window errors -- each with
its own diagnostic prefix so scripts can tell them apart.
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field, replace
from typing import Callable

from . import checks
from .checks import DEFAULT_SEED, VerificationReport
from .errors import DescriptorError, InsufficientWindowError
from .factorize import alpha_chain, dyadic_factorization, return_factorization
from .periods import profile
from .words import WordSource, parse_descriptor

LINE = 64  # letters per text line when rendering word prefixes


# ---------------------------------------------------------------------------
# configuration


@dataclass
class ExperimentConfig:
    """One runnable experiment; serializes losslessly with explicit defaults."""

    action: str
    word: str | None = None
    text: str | None = None
    claim: str | None = None
    params: dict = field(default_factory=dict)
    format: str = "text"
    out: str | None = None
    seed: int = DEFAULT_SEED

    def to_json(self) -> dict:
        return {
            "action": self.action,
            "word": self.word,
            "text": self.text,
            "claim": self.claim,
            "params": dict(self.params),
            "format": self.format,
            "out": self.out,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ExperimentConfig":
        known = {"action", "word", "text", "claim", "params", "format", "out", "seed"}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown config fields: {sorted(extra)}")
        if "action" not in data:
            raise ValueError("config needs an 'action' field")
        return cls(
            action=data["action"],
            word=data.get("word"),
            text=data.get("text"),
            claim=data.get("claim"),
            params=dict(data.get("params") or {}),
            format=data.get("format", "text"),
            out=data.get("out"),
            seed=data.get("seed", DEFAULT_SEED),
        )

    def resolved(self) -> "ExperimentConfig":
        """Copy with every applicable default written out explicitly."""
        defaults = _action_defaults(self)
        params = dict(defaults)
        params.update(self.params)
        return replace(self, params=params)


_ACTION_DEFAULTS: dict[str, dict] = {
    "generate": {"n": 64},
    "profile": {"n": 64, "cap": None},
    "factorize": {"z": None, "mode": "return", "level": 1, "horizon": 4096,
                  "exponent": None, "alpha_power": False},
    "alpha": {"depth": 2, "horizon": 10_000, "repetition_bound": None},
    "report": {"checkpoints": [2 ** t for t in range(4, 13)], "cap": None,
               "trend_from": 64},
}


def _action_defaults(cfg: "ExperimentConfig") -> dict:
    if cfg.action == "verify":
        spec = CLAIMS.get(cfg.claim or "")
        base = dict(spec.defaults) if spec else {}
        if spec and "seed" in base and base["seed"] is None:
            base["seed"] = cfg.seed
        return base
    return dict(_ACTION_DEFAULTS.get(cfg.action, {}))


# ---------------------------------------------------------------------------
# claim registry


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    kind: str  # "holub" | "source" | "none"
    defaults: tuple
    run: Callable[[dict, WordSource | None], VerificationReport]
    help: str

    @property
    def default_dict(self) -> dict:
        return dict(self.defaults)


def _holub_params(source: WordSource | None):
    params = getattr(source, "params", None)
    if params is None:
        name = source.descriptor if source is not None else "(none)"
        raise ValueError(f"this claim needs a holub-family word, got {name}")
    return params


def _make_registry() -> dict[str, ClaimSpec]:
    entries = [
        ClaimSpec(
            "big", "holub", (("depth", 3), ("cap", None)),
            lambda p, s: checks.check_peak_periods(_holub_params(s), p["depth"], p["cap"]),
            "local period at each anchor equals its closed form, with sharpness probe",
        ),
        ClaimSpec(
            "peak-witness", "holub", (("depth", 3),),
            lambda p, s: checks.check_peak_witness(_holub_params(s), p["depth"]),
            "minimal repetition word at each anchor is the predicted conjugate",
        ),
        ClaimSpec(
            "block-closure", "holub", (("depth", 4),),
            lambda p, s: checks.check_block_closure(_holub_params(s), p["depth"]),
            "u_i a and u_i b decode into blocks u_(i-1)a / u_(i-1)b",
        ),
        ClaimSpec(
            "occurrence-rigidity", "holub", (("depth", 3), ("horizon", 10_000)),
            lambda p, s: checks.check_occurrence_rigidity(
                _holub_params(s), p["depth"], p["horizon"]),
            "occurrences of u_i start only at multiples of |u_i|+1",
        ),
        ClaimSpec(
            "letter-formula", "holub", (("n", 10_000),),
            lambda p, s: checks.check_letter_formula(_holub_params(s), p["n"]),
            "congruence letter formula agrees with the recursion",
        ),
        ClaimSpec(
            "toeplitz-stages", "holub", (("n", 10_000), ("stage", None)),
            lambda p, s: checks.check_toeplitz_stages(_holub_params(s), p["n"], p["stage"]),
            "iterated hole-filling agrees with the recursion",
        ),
        ClaimSpec(
            "return-time-bound", "holub",
            (("depth", 2), ("horizon", None), ("max_factor_len", None)),
            lambda p, s: checks.check_return_time_bound(
                _holub_params(s), p["depth"], p["horizon"], p["max_factor_len"]),
            "factors of the prefix u_i recur within |u_i|+1 letters",
        ),
        ClaimSpec(
            "min-return-chain", "source",
            (("depth", 2), ("horizon", 10_000), ("repetition_bound", None)),
            lambda p, s: checks.check_lexmin_return_words(
                s, p["depth"], p["horizon"], p["repetition_bound"]),
            "chain words are lexicographic minima with Lyndon return words",
        ),
        ClaimSpec(
            "return-gain", "source",
            (("k", 1), ("kprime", None), ("window", 8), ("horizon", 20_000),
             ("repetition_bound", None)),
            lambda p, s: checks.check_return_gain(
                s, p["k"], p["kprime"], p["window"], p["horizon"], p["repetition_bound"]),
            "per-block complexity gain across nested return factorizations",
        ),
        ClaimSpec(
            "dyadic-gain", "source",
            (("k", 1), ("kprime", 4), ("window", 8), ("horizon", None),
             ("repetition_bound", None)),
            lambda p, s: checks.check_dyadic_gain(
                s, p["k"], p["kprime"], p["window"], p["horizon"], p["repetition_bound"]),
            "per-block period and complexity bounds across power-of-two tilings",
        ),
        ClaimSpec(
            "factor-bound", "none",
            (("trials", 10_000), ("maxlen", 14), ("seed", None)),
            lambda p, s: checks.check_factor_bound(p["trials"], p["maxlen"], p["seed"]),
            "factor local periods never exceed the enclosing word's",
        ),
        ClaimSpec(
            "superadditivity", "none",
            (("trials", 10_000), ("maxlen", 14), ("seed", None)),
            lambda p, s: checks.check_superadditivity(p["trials"], p["maxlen"], p["seed"]),
            "length-weighted complexity is superadditive under concatenation",
        ),
        ClaimSpec(
            "critical-exhaustive", "none",
            (("alphabet_size", 2), ("maxlen", 12)),
            lambda p, s: checks.check_critical_exhaustive(p["alphabet_size"], p["maxlen"]),
            "every short word attains its period as a local period",
        ),
        ClaimSpec(
            "oracle-equivalence", "none",
            (("alphabet_size", 2), ("maxlen", 12)),
            lambda p, s: checks.check_oracle_equivalence(p["alphabet_size"], p["maxlen"]),
            "incremental scan matches the brute-force enumeration oracle",
        ),
        ClaimSpec(
            "divergence", "source",
            (("checkpoints", [2 ** t for t in range(4, 13)]), ("cap", None),
             ("trend_from", 64)),
            lambda p, s: checks.divergence_report(s, p["checkpoints"], p["cap"], p["trend_from"]),
            "running complexity trend at checkpoints (empirical only)",
        ),
        ClaimSpec(
            "peak-average", "holub", (("depth", 3), ("cap", None)),
            lambda p, s: checks.check_peak_average(_holub_params(s), p["depth"], p["cap"]),
            "running complexity strictly exceeds peak/position at each anchor",
        ),
    ]
    return {e.claim_id: e for e in entries}


CLAIMS = _make_registry()


# ---------------------------------------------------------------------------
# rendering


def _atomic_write(path: str, data: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as f:
        f.write(data)
    os.replace(tmp, path)


def _emit(cfg: ExperimentConfig, data: str) -> None:
    if cfg.out:
        _atomic_write(cfg.out, data)
    else:
        sys.stdout.write(data)


def _json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _ruler(letters: str, start: int = 1) -> str:
    lines = []
    for t in range(0, len(letters), LINE):
        lines.append(f"{start + t:>8}  {letters[t:t + LINE]}")
    return "\n".join(lines) + "\n"


def _report_text(rep: VerificationReport) -> str:
    lines = [
        f"claim:     {rep.claim}",
        f"status:    {rep.status}",
        f"instances: {rep.instances}",
    ]
    if rep.notes:
        lines.append(f"notes:     {rep.notes}")
    for row in rep.details:
        lines.append("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
    if rep.counterexample is not None:
        lines.append("counterexample:")
        for k, v in rep.counterexample.items():
            lines.append(f"  {k}: {v}")
    return "\n".join(lines) + "\n"


def _status_exit(status: str) -> int:
    if status == checks.FAIL:
        return 2
    if status == checks.INCONCLUSIVE:
        return 3
    return 0


# ---------------------------------------------------------------------------
# actions


def _run_generate(cfg: ExperimentConfig) -> tuple[int, str | None]:
    source = parse_descriptor(cfg.word or "")
    n = cfg.params["n"]
    letters = source.prefix(n)
    if cfg.format == "json":
        _emit(cfg, _json_text({"descriptor": source.descriptor, "n": n, "letters": letters}))
    elif cfg.format == "csv":
        _emit(cfg, _csv_text(["index", "letter"], [[i + 1, c] for i, c in enumerate(letters)]))
    else:
        _emit(cfg, _ruler(letters))
    return 0, None


def _run_profile(cfg: ExperimentConfig) -> tuple[int, str | None]:
    if cfg.text is not None:
        prof = profile(cfg.text)
    else:
        source = parse_descriptor(cfg.word or "")
        prof = profile(source, n=cfg.params["n"], cap=cfg.params["cap"])
    if cfg.format == "json":
        _emit(cfg, _json_text(prof.to_json()))
    elif cfg.format == "csv":
        rows = [
            [r["index"], r["local_period"], r["h_numerator"], r["h_denominator"], r["h_approx"]]
            for r in prof.rows()
        ]
        _emit(cfg, _csv_text(
            ["index", "local_period", "h_numerator", "h_denominator", "h_approx"], rows))
    else:
        body = [f"subject: {prof.descriptor}", f"{'i':>6} {'p(i)':>8} {'h(i)':>12}"]
        for r in prof.rows():
            h = "-" if r["h_numerator"] is None else f"{r['h_numerator']}/{r['h_denominator']}"
            body.append(f"{r['index']:>6} {str(r['local_period']):>8} {h:>12}")
        _emit(cfg, "\n".join(body) + "\n")
    return 0, None


def _run_factorize(cfg: ExperimentConfig) -> tuple[int, str | None]:
    source = parse_descriptor(cfg.word or "")
    p = cfg.params
    if p["mode"] == "dyadic":
        dy = dyadic_factorization(source, p["level"], p["horizon"])
        if cfg.format == "csv":
            from .periods import h_of
            rows = []
            for j, b in enumerate(dy.blocks):
                h = h_of(b)
                rows.append([j, j * dy.block_length, len(b), h.numerator, h.denominator])
            _emit(cfg, _csv_text(["index", "offset", "length", "h_num", "h_den"], rows))
        else:
            _emit(cfg, _json_text(dy.to_json()))
        return 0, None
    if not p["z"]:
        raise ValueError("factorize needs --z for return mode")
    fact = return_factorization(
        source, p["z"], p["horizon"], exponent=p["exponent"],
        assert_block_prefix=p["alpha_power"],
    )
    if cfg.format == "csv":
        from .periods import h_of
        rows = []
        bounds = fact.boundaries()
        for j, w in enumerate(fact.returns, 1):
            h = h_of(w)
            rows.append([j, bounds[j - 1], len(w), h.numerator, h.denominator])
        _emit(cfg, _csv_text(["index", "offset", "length", "h_num", "h_den"], rows))
    elif cfg.format == "json":
        _emit(cfg, _json_text(fact.to_json()))
    else:
        data = fact.to_json()
        body = [f"{k}: {data[k]}" for k in ("z", "e", "preamble", "m_k", "mu_k", "horizon")]
        body.append(f"returns ({len(fact.returns)}):")
        body.extend(f"  {w}" for w in fact.returns[:40])
        if len(fact.returns) > 40:
            body.append(f"  ... {len(fact.returns) - 40} more")
        _emit(cfg, "\n".join(body) + "\n")
    return 0, None


def _run_alpha(cfg: ExperimentConfig) -> tuple[int, str | None]:
    source = parse_descriptor(cfg.word or "")
    p = cfg.params
    chain = alpha_chain(source, p["depth"], p["horizon"], p["repetition_bound"])
    if cfg.format == "csv":
        rows = [[e_.alpha, e_.exponent, e_.horizon] for e_ in chain.entries]
        _emit(cfg, _csv_text(["alpha", "exponent", "horizon"], rows))
    elif cfg.format == "json":
        _emit(cfg, _json_text(chain.to_json()))
    else:
        body = [f"alphabet: {chain.alphabet}",
                f"exponents certified: {chain.exponents_certified}"]
        for t, e_ in enumerate(chain.entries, 1):
            body.append(f"  level {t}: alpha={e_.alpha!r} exponent={e_.exponent}")
        _emit(cfg, "\n".join(body) + "\n")
    return 0, None


def _run_verify(cfg: ExperimentConfig) -> tuple[int, str | None]:
    spec = CLAIMS.get(cfg.claim or "")
    if spec is None:
        known = ", ".join(sorted(CLAIMS))
        raise ValueError(f"unknown claim {cfg.claim!r}; known claims: {known}")
    source = None
    if spec.kind != "none":
        if not cfg.word:
            raise ValueError(f"claim {spec.claim_id!r} needs --word")
        source = parse_descriptor(cfg.word)
    rep = spec.run(cfg.params, source)
    if cfg.format == "json":
        _emit(cfg, _json_text(rep.to_json()))
    elif cfg.format == "csv":
        _emit(cfg, _csv_text(
            ["claim", "status", "instances", "notes"],
            [[rep.claim, rep.status, rep.instances, rep.notes]]))
    else:
        _emit(cfg, _report_text(rep))
    if rep.status == checks.WINDOWED:
        print(
            f"warning: claim {rep.claim!r} verified over a finite window only",
            file=sys.stderr,
        )
    return _status_exit(rep.status), rep.status


def _run_report(cfg: ExperimentConfig) -> tuple[int, str | None]:
    source = parse_descriptor(cfg.word or "")
    p = cfg.params
    rep = checks.divergence_report(source, p["checkpoints"], p["cap"], p["trend_from"])
    if cfg.format == "csv":
        rows = [
            [r["i"], r["h_numerator"], r["h_denominator"], r["h_approx"], r["capped"]]
            for r in rep.details
        ]
        _emit(cfg, _csv_text(["i", "h_numerator", "h_denominator", "h_approx", "capped"], rows))
    elif cfg.format == "json":
        _emit(cfg, _json_text(rep.to_json()))
    else:
        _emit(cfg, _report_text(rep))
    if rep.status == checks.WINDOWED:
        print("warning: trend observed over a finite window only", file=sys.stderr)
    return _status_exit(rep.status), rep.status


_RUNNERS = {
    "generate": _run_generate,
    "profile": _run_profile,
    "factorize": _run_factorize,
    "alpha": _run_alpha,
    "verify": _run_verify,
    "report": _run_report,
}


def run(cfg: ExperimentConfig) -> int:
    """Execute one resolved config; returns the process exit code."""
    cfg = cfg.resolved()
    runner = _RUNNERS.get(cfg.action)
    if runner is None:
        raise ValueError(f"unknown action {cfg.action!r}")
    code, _ = runner(cfg)
    return code


_EXT = {"json": "json", "csv": "csv", "text": "txt"}


def run_batch(config_path: str, out_dir: str) -> int:
    """Run every entry of a batch file; one entry's error never stops the rest."""
    with open(config_path, encoding="utf-8") as f:
        data = json.load(f)
    runs = data.get("runs")
    if runs is None:
        raise ValueError("batch config needs a top-level 'runs' list")
    os.makedirs(out_dir, exist_ok=True)
    summary = []
    statuses = []
    for idx, entry in enumerate(runs):
        row = {"index": idx, "action": entry.get("action"), "word": entry.get("word"),
               "claim": entry.get("claim"), "status": None, "out": None, "error": None}
        try:
            cfg = ExperimentConfig.from_json(entry).resolved()
            out_name = cfg.out or f"{idx:03d}-{cfg.action}.{_EXT.get(cfg.format, 'txt')}"
            cfg = replace(cfg, out=os.path.join(out_dir, out_name))
            runner = _RUNNERS.get(cfg.action)
            if runner is None:
                raise ValueError(f"unknown action {cfg.action!r}")
            _, status = runner(cfg)
            row["status"] = status or "ok"
            row["out"] = os.path.basename(cfg.out)
        except (DescriptorError, InsufficientWindowError, ValueError, OSError) as e:
            row["status"] = "error"
            row["error"] = f"{type(e).__name__}: {e}"
        summary.append(row)
        statuses.append(row["status"])
    _atomic_write(os.path.join(out_dir, "summary.json"), _json_text({"runs": summary}))
    if any(s == "fail" for s in statuses):
        return 2
    if any(s == "error" for s in statuses):
        return 1
    if any(s == "inconclusive" for s in statuses):
        return 3
    return 0


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1, not argparse's default 2 (2 means "fail")
        print(f"usage error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _int_or_none(text: str):
    return None if text.lower() in ("none", "auto") else int(text)


def _checkpoint_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t]


def _build_parser() -> _Parser:
    top = _Parser(prog="periwords",
                  description="local periods and periodicity complexity toolkit")
    sub = top.add_subparsers(dest="action", required=True)

    def common(p, word=True):
        if word:
            p.add_argument("--word", help="word descriptor, e.g. fibonacci, holub:n=2,2;tail=repeat")
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    g = sub.add_parser("generate", help="print a prefix of a word")
    common(g)
    g.add_argument("--n", type=int, default=64)

    pr = sub.add_parser("profile", help="local periods and running complexity")
    common(pr)
    pr.add_argument("--text", help="literal finite word instead of --word")
    pr.add_argument("--n", type=int, default=64)
    pr.add_argument("--cap", type=_int_or_none, default=None)

    fa = sub.add_parser("factorize", help="return-word or power-of-two factorization")
    common(fa)
    fa.add_argument("--z", help="marker factor for return mode")
    fa.add_argument("--mode", choices=["return", "dyadic"], default="return")
    fa.add_argument("--level", type=int, default=1, help="dyadic level (block length 2^level)")
    fa.add_argument("--horizon", type=int, default=4096)
    fa.add_argument("--exponent", type=_int_or_none, default=None)
    fa.add_argument("--alpha-power", action="store_true", dest="alpha_power",
                    help="assert the marker prefixes every return word")

    al = sub.add_parser("alpha", help="minimal-return chain")
    common(al)
    al.add_argument("--K", "--depth", dest="depth", type=int, default=2)
    al.add_argument("--horizon", type=int, default=10_000)
    al.add_argument("--repetition-bound", dest="repetition_bound",
                    type=_int_or_none, default=None)

    ve = sub.add_parser("verify", help="run one claim checker")
    common(ve)
    ve.add_argument("--claim", required=True, help=", ".join(sorted(CLAIMS)))
    ve.add_argument("--J", "--I", "--K", "--depth", dest="depth", type=_int_or_none, default=None)
    ve.add_argument("--cap", type=_int_or_none, default=None)
    ve.add_argument("--n", type=_int_or_none, default=None)
    ve.add_argument("--stage", type=_int_or_none, default=None)
    ve.add_argument("--horizon", type=_int_or_none, default=None)
    ve.add_argument("--window", type=_int_or_none, default=None)
    ve.add_argument("--k", type=_int_or_none, default=None)
    ve.add_argument("--kprime", type=_int_or_none, default=None)
    ve.add_argument("--trials", type=_int_or_none, default=None)
    ve.add_argument("--maxlen", type=_int_or_none, default=None)
    ve.add_argument("--alphabet-size", dest="alphabet_size", type=_int_or_none, default=None)
    ve.add_argument("--repetition-bound", dest="repetition_bound",
                    type=_int_or_none, default=None)
    ve.add_argument("--max-factor-len", dest="max_factor_len", type=_int_or_none, default=None)
    ve.add_argument("--checkpoints", type=_checkpoint_list, default=None)
    ve.add_argument("--trend-from", dest="trend_from", type=_int_or_none, default=None)

    re_ = sub.add_parser("report", help="complexity trend at checkpoints")
    common(re_)
    re_.add_argument("--checkpoints", type=_checkpoint_list, default=None)
    re_.add_argument("--cap", type=_int_or_none, default=None)
    re_.add_argument("--trend-from", dest="trend_from", type=int, default=64)

    ba = sub.add_parser("batch", help="run a JSON list of configs")
    ba.add_argument("--config", required=True)
    ba.add_argument("--out-dir", dest="out_dir", default=".")
    return top


_VERIFY_KEYS = (
    "depth", "cap", "n", "stage", "horizon", "window", "k", "kprime", "trials",
    "maxlen", "alphabet_size", "repetition_bound", "max_factor_len",
    "checkpoints", "trend_from",
)


def _config_from_args(ns: argparse.Namespace) -> ExperimentConfig:
    action = ns.action
    params: dict = {}
    if action == "generate":
        params["n"] = ns.n
    elif action == "profile":
        params["n"] = ns.n
        params["cap"] = ns.cap
    elif action == "factorize":
        params.update(z=ns.z, mode=ns.mode, level=ns.level, horizon=ns.horizon,
                      exponent=ns.exponent, alpha_power=ns.alpha_power)
    elif action == "alpha":
        params.update(depth=ns.depth, horizon=ns.horizon,
                      repetition_bound=ns.repetition_bound)
    elif action == "verify":
        for key in _VERIFY_KEYS:
            value = getattr(ns, key)
            if value is not None:
                params[key] = value
        if "seed" not in params:
            params["seed"] = ns.seed
    elif action == "report":
        params.update(cap=ns.cap, trend_from=ns.trend_from)
        if ns.checkpoints is not None:
            params["checkpoints"] = ns.checkpoints
    return ExperimentConfig(
        action=action,
        word=getattr(ns, "word", None),
        text=getattr(ns, "text", None),
        claim=getattr(ns, "claim", None),
        params=params,
        format=getattr(ns, "format", "text"),
        out=getattr(ns, "out", None),
        seed=getattr(ns, "seed", DEFAULT_SEED),
    )


def main(argv: list[str] | None = None) -> int:
    ns = _build_parser().parse_args(argv)
    try:
        if ns.action == "batch":
            return run_batch(ns.config, ns.out_dir)
        return run(_config_from_args(ns))
    except DescriptorError as e:
        print(f"descriptor error: {e}", file=sys.stderr)
        return 1
    except InsufficientWindowError as e:
        print(f"window error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"output error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"parameter error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
