from .DiffOperator import DiffOperator as DiffOperator
from .DilationFamily import DilationFamily as DilationFamily
from .DilationFamily import DualVector as DualVector
from .Elements import AlgebraElement as AlgebraElement
from .Elements import GroupElement as GroupElement
from .Estimates import CountEstimate as CountEstimate
from .Estimates import FitResult as FitResult
from .Estimates import MultiplierQuery as MultiplierQuery
from .FlatOrbit import EngelOrbit as EngelOrbit
from .FlatOrbit import FlatOrbit as FlatOrbit
from .FlatOrbit import MonteCarloEstimate as MonteCarloEstimate
from .FlatOrbit import OrbitalMeasure as OrbitalMeasure
from .GradedLieAlgebra import GradedLieAlgebra as GradedLieAlgebra
from .PolyExpFunction import PolyExpFunction as PolyExpFunction
from .RocklandForm import RocklandForm as RocklandForm
from .RocklandForm import RocklandTerm as RocklandTerm
from .Spectrum import ConvergenceReport as ConvergenceReport
from .Spectrum import GridSpec as GridSpec
from .Spectrum import SparseOperator as SparseOperator
from .Spectrum import SpectrumResult as SpectrumResult
