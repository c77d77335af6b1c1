from .lab import StokesLab
from .suite import QuickSuiteConfig, SuiteConfig, VerifySuite
