"""Contrôles de cohérence du moteur."""

from .suite import CheckResult, VerificationSuite, VerifyReport, run_verification

__all__ = ["CheckResult", "VerificationSuite", "VerifyReport", "run_verification"]
