"""Checks run by the commands, one ``Item`` per pair and check.

A check never lets an ``AlgebraError`` escape: broken preconditions become
``hypothesis-not-met``, exhausted caps ``inconclusive`` and anything else ``fail``.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Any, Callable, Iterable

from sympy import isprime

from catalog.catalogs import abelian_quotient_pairs, cocyclic_pairs
from catalog.entries import CatalogEntry
from cli import serializers
from core.exceptions import (
    AlgebraError,
    CosetLimitExceeded,
    GroupOrderOverflow,
    NormalityError,
    PreconditionError,
)
from core.verdicts import Verdict, verdict_of, worst_verdict
from exactalg.abelian import AbHom, FgAbGroup
from fpgroups.schreier import free_rank_nielsen_schreier
from mackey.ab import ab_datum, verify_eucc, verify_prop_h90
from mackey.datum import SectionCohomology, section_cohomology, six_term_check, validate_datum
from permgroups.subgroups import verify_lemma21
from transfer.kernels import ConsistencyReport, composition_holds, transfer_consistency
from transfer.pairs import FpPair, GroupPair, PermPair
from transfer.theorems import (
    TransferReport,
    gtf_report,
    transfer_report,
    verify_suzuki,
    verify_thm_A,
    verify_thm_B,
    verify_thm_C,
    verify_thm_D,
)

logger = logging.getLogger(__name__)

SUITES = ("thm-a", "thm-c", "suzuki", "thm-d", "thm-b", "mackey")


@dataclass(frozen=True)
class Item:
    label: str
    check: str
    verdict: Verdict
    report: dict | None = None
    error: str | None = None


def run_check(label: str, check: str, compute: Callable[[], tuple[Verdict, dict]]) -> Item:
    try:
        verdict, report = compute()
    except (PreconditionError, NormalityError) as exc:
        return Item(label, check, Verdict.HYPOTHESIS_NOT_MET, error=str(exc))
    except (CosetLimitExceeded, GroupOrderOverflow) as exc:
        return Item(label, check, Verdict.INCONCLUSIVE, error=str(exc))
    except AlgebraError as exc:
        logger.warning("%s on %s raised %s", check, label, exc)
        return Item(label, check, Verdict.FAIL, error=f"{type(exc).__name__}: {exc}")
    return Item(label, check, verdict, report)


def _quotient_generators(pair: GroupPair) -> list[Any]:
    """One generator of ``G/N`` per generating coset for permutation pairs."""
    if isinstance(pair, PermPair):
        return [r for r in pair.transversal if pair.generates_quotient(r)]
    return [pair.quotient_generator()]


def check_thm_a(pair: GroupPair) -> tuple[Verdict, dict]:
    kernels = [verify_thm_A(pair, s) for s in _quotient_generators(pair)]
    report = {"kernels": serializers.KernelReportSerializer(kernels, many=True).data}
    verdicts = [r.verdict for r in kernels]
    if isinstance(pair, PermPair):
        sections = [
            verify_lemma21(pair.group, pair.subgroup, s) for s in _quotient_generators(pair)
        ]
        report["commutators"] = serializers.CyclicSectionReportSerializer(
            sections, many=True
        ).data
        verdicts += [r.verdict for r in sections]
    return worst_verdict(verdicts), report


def check_thm_c(pair: GroupPair) -> tuple[Verdict, dict]:
    report = verify_thm_C(pair)
    return report.verdict, serializers.OrderReportSerializer(report).data


def check_suzuki(pair: GroupPair) -> tuple[Verdict, dict]:
    report = verify_suzuki(pair)
    return report.verdict, serializers.DivisibilityReportSerializer(report).data


def check_thm_d(pair: GroupPair) -> tuple[Verdict, dict]:
    report = verify_thm_D(pair)
    data = serializers.RankReportSerializer(report).data
    if isinstance(pair, FpPair) and not pair.group.relators:
        data["nielsen_schreier"] = free_rank_nielsen_schreier(pair.group.ngens, pair.index)
    return report.verdict, data


def check_thm_b(pair: GroupPair) -> tuple[Verdict, dict]:
    report = verify_thm_B(pair)
    return report.verdict, serializers.PermutationModuleReportSerializer(report).data


def check_mackey(pair: GroupPair) -> tuple[Verdict, dict]:
    datum = ab_datum(pair)
    validation = validate_datum(datum)
    exactness = six_term_check(datum)
    euler = verify_eucc(pair)
    hilbert90 = verify_prop_h90(pair)
    report = {
        "validation": serializers.DatumValidationSerializer(validation).data,
        "six_term": serializers.ExactnessReportSerializer(exactness).data,
        "euler": serializers.EulerReportSerializer(euler).data,
        "hilbert90": serializers.Hilbert90ReportSerializer(hilbert90).data,
    }
    verdicts = (r.verdict for r in (validation, exactness, euler, hilbert90))
    return worst_verdict(verdicts), report


CHECKS: dict[str, Callable[[GroupPair], tuple[Verdict, dict]]] = {
    "thm-a": check_thm_a,
    "thm-c": check_thm_c,
    "suzuki": check_suzuki,
    "thm-d": check_thm_d,
    "thm-b": check_thm_b,
    "mackey": check_mackey,
}


def _applies(suite: str, pair: GroupPair) -> bool:
    return suite != "thm-d" or bool(isprime(pair.index))


def checked_run(
    suite: str, pair: GroupPair, consistency: dict[str, ConsistencyReport]
) -> Item:
    """``suite`` on ``pair``; an inconsistent transfer fails the item.

    The composition law and transversal independence are checked once per pair and
    shared through ``consistency`` by every suite run on it.
    """

    def compute():
        if pair.label not in consistency:
            consistency[pair.label] = transfer_consistency(pair, random.Random(pair.label))
        transfer = consistency[pair.label]
        verdict, report = CHECKS[suite](pair)
        report["consistency"] = serializers.ConsistencyReportSerializer(transfer).data
        return worst_verdict([verdict, transfer.verdict]), report

    return run_check(pair.label, suite, compute)


def entry_pairs(
    entry: CatalogEntry, max_cosets: int | None = None, abelian: bool = False
) -> list[GroupPair]:
    """Searched pairs of a finite entry, with cyclic or with ``abelian`` quotients."""
    if entry.is_finite:
        return abelian_quotient_pairs(entry) if abelian else cocyclic_pairs(entry)
    return entry.pairs(max_cosets)


def _gtf_item(entry: CatalogEntry, pairs: list[GroupPair]) -> Item | None:
    sections = [p for p in pairs if isprime(p.index)]
    if not sections:
        return None

    def compute():
        report = gtf_report(sections)
        return report.verdict, serializers.GtfReportSerializer(report).data

    return run_check(entry.name, "gtf", compute)


def sweep(
    suites: Iterable[str], entries: Iterable[CatalogEntry], max_cosets: int | None = None
) -> list[Item]:
    """Run ``suites`` over every pair of every entry, in entry order.

    ``suzuki`` visits every subgroup with abelian quotient of a finite entry, the other
    suites its co-cyclic subgroups; infinite entries use their declared subgroups.
    """
    suites = list(suites)
    items = []
    for entry in entries:
        try:
            pairs = entry_pairs(entry, max_cosets)
            abelian = pairs
            if entry.is_finite and "suzuki" in suites:
                abelian = entry_pairs(entry, max_cosets, abelian=True)
        except (CosetLimitExceeded, GroupOrderOverflow) as exc:
            items.append(Item(entry.name, "pairs", Verdict.INCONCLUSIVE, error=str(exc)))
            continue
        consistency: dict[str, ConsistencyReport] = {}
        for suite in suites:
            for pair in abelian if suite == "suzuki" else pairs:
                if _applies(suite, pair):
                    items.append(checked_run(suite, pair, consistency))
            if suite == "thm-d" and (item := _gtf_item(entry, pairs)) is not None:
                items.append(item)
        logger.info("%s: %d pairs checked", entry.name, len(pairs))
    return items


@dataclass(frozen=True)
class Analysis:
    label: str
    backend: str
    index: int
    normal: bool
    cyclic_quotient: bool
    ab_g: FgAbGroup
    ab_u: FgAbGroup
    transfer_map: AbHom
    inclusion_map: AbHom
    composition_holds: bool
    transfer: TransferReport | None = None
    section_cohomology: SectionCohomology | None = None


def analyze_pair(pair: GroupPair) -> list[Item]:
    """Everything known about one pair.

    The transfer is computed for any finite-index subgroup; kernel and cokernel need a
    normal subgroup, the divisibility check an abelian quotient of a finite group and
    the theorem checks a cyclic quotient.
    """
    normal = pair.is_normal()
    cyclic = False
    if normal:
        try:
            pair.quotient_generator()
            cyclic = True
        except PreconditionError:
            logger.info("%s: G/U is not cyclic", pair.label)
    abelian = pair.is_finite and pair.has_abelian_quotient()
    analysis = Analysis(
        label=pair.label,
        backend=pair.backend,
        index=pair.index,
        normal=normal,
        cyclic_quotient=cyclic,
        ab_g=pair.ab_g,
        ab_u=pair.ab_u,
        transfer_map=pair.transfer_map(),
        inclusion_map=pair.inclusion_map(),
        composition_holds=composition_holds(pair),
        transfer=transfer_report(pair) if normal else None,
        section_cohomology=section_cohomology(ab_datum(pair)) if cyclic else None,
    )
    items = [
        Item(
            pair.label,
            "transfer",
            verdict_of(analysis.composition_holds),
            serializers.AnalysisSerializer(analysis).data,
        )
    ]
    consistency: dict[str, ConsistencyReport] = {}
    for suite in ("thm-a", "thm-c", "suzuki", "thm-d", "mackey"):
        wanted = abelian if suite == "suzuki" else cyclic
        if wanted and _applies(suite, pair):
            items.append(checked_run(suite, pair, consistency))
    return items
