"""Verification suites."""

from parabolic_kl.verification.verifier import SUITES, Verifier, VerificationReport

__all__ = ["SUITES", "Verifier", "VerificationReport"]
