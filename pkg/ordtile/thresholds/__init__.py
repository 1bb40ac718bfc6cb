from .classify import PerfectCase, ThresholdReport, classify
