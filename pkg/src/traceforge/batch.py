"""Batch corpus runner: per-semigroup reports, theorem checks, JSON/CSV output.

A survey walks every numerical semigroup up to a genus bound and runs
the whole battery on each: invariants, value-set condition, Kunz
classification, Arf flag, trace enumeration over F_p, the blowup
bijection where it applies, and a colon-separation probe where its
preconditions hold.  Results are written one JSON file per semigroup
plus a summary CSV; identical (config, seed) pairs produce
byte-identical records (timestamps and timings live in a separate
"meta" object).
"""

from __future__ import annotations

import csv
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .errors import PreconditionViolated
from .semigroups import (NumericalSemigroup, canonical_value_set,
                         enumerate_semigroups, is_arf, kunz_cone_classify,
                         value_set_condition, cm_type_list_check, INTERIOR)
from .trace import (enumerate_trace_ideals, family_probe, is_trace_ideal,
                    verify_bijection)
from .ideals import maximal_ideal, contains_ideal, conductor_ideal
from .fields import GF

__all__ = ["JobConfig", "survey", "survey_one", "SCHEMA_VERSION",
           "SUMMARY_COLUMNS", "read_corpus", "thread_count"]

SCHEMA_VERSION = 1

SUMMARY_COLUMNS = ("gens", "genus", "mult", "edim", "arf", "kunz_class",
                   "vs_condition", "n_trace_p", "bijection_ok", "family_witness")

PROBE_SAMPLE_COUNT = 5


@dataclass(frozen=True)
class JobConfig:
    """Echo of a survey invocation; (config, seed) determines every record."""

    command: str
    max_genus: int
    prime: int
    out_dir: str
    seed: int
    threads: int

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "max_genus": self.max_genus,
            "prime": self.prime,
            "out_dir": self.out_dir,
            "seed": self.seed,
            "threads": self.threads,
        }


def thread_count(explicit: int | None = None) -> int:
    if explicit is not None:
        return max(1, explicit)
    env = os.environ.get("TRACE_FORGE_THREADS")
    return max(1, int(env)) if env else 1


def read_corpus(path) -> list[tuple[int, ...]]:
    """One semigroup per line, comma-separated generators, '#' comments."""
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        out.append(tuple(int(p) for p in line.split(",") if p.strip()))
    return out


def _probe_samples(gens: tuple, seed: int) -> list[int]:
    # per-semigroup RNG so records do not depend on worker partitioning
    rng = random.Random(f"{seed}:{','.join(map(str, gens))}")
    return sorted(rng.sample(range(0, 40), PROBE_SAMPLE_COUNT))


def _probe_exponent(H: NumericalSemigroup) -> int | None:
    K = canonical_value_set(H)
    if 1 in K:
        return None
    for n in range(2, H.frobenius + 1):
        if n not in K and (n + 1) not in K:
            return n
    return None


def survey_one(gens: tuple, prime: int, seed: int) -> dict:
    """The full per-semigroup record; pure given (gens, prime, seed)."""
    H = NumericalSemigroup.from_generators(gens)
    record: dict = {
        "gens": H.text,
        "genus": H.genus,
        "frobenius": H.frobenius,
        "conductor": H.conductor,
        "gaps": list(H.gaps()),
        "multiplicity": H.multiplicity,
        "embedding_dimension": H.embedding_dimension,
        "minimal_multiplicity": H.has_minimal_multiplicity,
        "gorenstein": H.is_symmetric,
        "cm_type": H.cm_type,
        "arf": is_arf(H),
        "finite_type_tag": cm_type_list_check(H),
    }
    violations: list[str] = []

    cond = value_set_condition(H)
    record["vs_condition"] = {"kind": cond.kind, "witness": cond.witness}

    if H.genus == 0:
        record["kunz"] = None
        kunz_ok = True
    else:
        e = H.multiplicity
        kv = H.kunz_coordinates(e) if e >= 2 else None
        if kv is None:
            record["kunz"] = None
            kunz_ok = True
        else:
            region = kunz_cone_classify(kv)
            record["kunz"] = {"e": e, "coords": list(kv.coords), "class": region}
            kunz_ok = (region != "exterior"
                       and (region == INTERIOR) == H.has_minimal_multiplicity)
    if not kunz_ok:
        violations.append("kunz-classification")

    field = GF(prime)
    enum = enumerate_trace_ideals(H, prime)
    record["trace"] = {"prime": prime, **enum.to_report()}
    record["n_trace"] = enum.count_with_zero

    cond_ideal = conductor_ideal(field, H)
    conductor_least = all(contains_ideal(i.ideal, cond_ideal) for i in enum.ideals) \
        and any(i.is_conductor for i in enum.ideals)
    if not conductor_least:
        violations.append("conductor-least-trace")

    m_trace = is_trace_ideal(maximal_ideal(field, H))
    maximal_check = m_trace == (H.genus != 0)
    record["maximal_ideal_is_trace"] = m_trace
    if not maximal_check:
        violations.append("maximal-ideal-trace")

    bijection_ok = None
    if H.genus > 0 and H.has_minimal_multiplicity:
        rep = verify_bijection(H, prime)
        bijection_ok = rep.ok
        record["bijection"] = {"ok": rep.ok, "left": rep.left_count,
                               "right": rep.right_count, "blowup": rep.blowup}
        if not rep.ok:
            violations.append("blowup-bijection")
    else:
        record["bijection"] = None

    shadow_ok = None
    if record["arf"]:
        shadow_ok = cond.holds()
        if not shadow_ok:
            violations.append("arf-value-set-condition")

    probe = None
    n = _probe_exponent(H)
    if n is not None:
        samples = _probe_samples(gens, seed)
        try:
            rep = family_probe(H, n, samples)
            probe = {"n": n, "samples": list(map(int, rep.samples)),
                     "distinct": rep.distinct_results, "verdict": rep.verdict}
        except PreconditionViolated:
            probe = None
    record["family_probe"] = probe

    record["checks"] = {
        "conductor_least_trace": conductor_least,
        "maximal_ideal_trace_iff_not_dvr": maximal_check,
        "blowup_bijection": bijection_ok,
        "arf_value_set_condition": shadow_ok,
        "kunz_class_consistent": kunz_ok,
    }
    record["violations"] = violations
    record["flag_for_study"] = (not cond.holds())
    return record


def _worker(args):
    return survey_one(*args)


def survey(max_genus: int, prime: int, out_dir, seed: int = 0,
           threads: int | None = None) -> dict:
    """Run the battery over every semigroup of genus <= max_genus.

    Writes one JSON per semigroup plus summary.csv and run.json under
    ``out_dir`` and returns the run record.  max_genus is capped at 10.
    """
    if max_genus > 10:
        raise ValueError("survey bound is genus 10")
    threads = thread_count(threads)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    config = JobConfig("survey", max_genus, prime, str(out_dir), seed, threads)

    gens_list = [H.minimal_generators for H in enumerate_semigroups(max_genus)]
    t0 = time.monotonic()
    jobs = [(g, prime, seed) for g in gens_list]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(_worker, jobs))
    else:
        records = [survey_one(*job) for job in jobs]
    elapsed = time.monotonic() - t0

    summary_rows = []
    violations = []
    for rec in records:
        if rec["violations"]:
            violations.append({"gens": rec["gens"], "violations": rec["violations"]})
        summary_rows.append({
            "gens": rec["gens"],
            "genus": rec["genus"],
            "mult": rec["multiplicity"],
            "edim": rec["embedding_dimension"],
            "arf": rec["arf"],
            "kunz_class": rec["kunz"]["class"] if rec["kunz"] else "",
            "vs_condition": rec["vs_condition"]["kind"],
            "n_trace_p": rec["n_trace"],
            "bijection_ok": "" if rec["bijection"] is None else rec["bijection"]["ok"],
            "family_witness": "" if rec["family_probe"] is None
                              else rec["family_probe"]["verdict"],
        })

    run_record = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "config": config.to_json(),
        "count": len(records),
        "violations": violations,
        "flagged_for_study": [r["gens"] for r in records if r["flag_for_study"]],
        "results": summary_rows,
    }
    meta = {"timestamp": datetime.now(timezone.utc).isoformat(),
            "elapsed_s": elapsed}

    for rec in records:
        name = "H_" + rec["gens"].replace(",", "-") + ".json"
        _write_json(out / name, {"schema_version": SCHEMA_VERSION,
                                 "record": rec, "meta": meta})
    _write_json(out / "run.json", {"record": run_record, "meta": meta})
    with (out / "summary.csv").open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=SUMMARY_COLUMNS)
        writer.writeheader()
        for row in summary_rows:
            writer.writerow(row)
    return run_record


def _write_json(path: Path, payload: dict):
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
