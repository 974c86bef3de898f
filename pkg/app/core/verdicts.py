from django.db import models


class Verdict(models.TextChoices):
    PASS = "pass"
    FAIL = "fail"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"
    INCONCLUSIVE = "inconclusive"


def verdict_of(holds: bool) -> Verdict:
    return Verdict.PASS if holds else Verdict.FAIL


_SEVERITY = (Verdict.FAIL, Verdict.INCONCLUSIVE, Verdict.HYPOTHESIS_NOT_MET, Verdict.PASS)


def worst_verdict(verdicts) -> Verdict:
    """The most severe verdict; ``pass`` for an empty collection."""
    verdicts = set(verdicts)
    return next((v for v in _SEVERITY if v in verdicts), Verdict.PASS)
