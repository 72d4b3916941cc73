"""Pixel-only automated game testing framework.

Three cooperating pieces drive a deterministic built-in simulator from
screenshots alone: a curiosity-trained exploration policy, a few-shot key
object detector, and an imitation-trained investigation policy, integrated
by an orchestration loop that files reproducible bug reports.
"""

__version__ = "0.1.0"
