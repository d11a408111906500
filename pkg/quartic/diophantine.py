"""
diophantine.py: solutions of x^4 - q^4 = p*y^r

An EquationInstance fixes the primes ( p, q, r ), r odd, so y**r is
defined for negative y and every sign combination is a candidate.

verifySolution() checks one pair, searchSolutions() walks y over a
symmetric range and recovers x by an exact fourth root, and
decomposeSolution() replays the case split of the non-existence
argument on a concrete solution:

    ( x^2 - q^2 ) * ( x^2 + q^2 ) = p * y^r

x odd (q odd): d = gcd = 2 and one of
    B1a  x^2 - q^2 = 2^(r-1) p y1^r    x^2 + q^2 = 2 y2^r
    B1b  x^2 - q^2 = 2^(r-1) y1^r      x^2 + q^2 = 2 p y2^r
x even: d = 1 and one of
    B2a  x^2 - q^2 = p y1^r            x^2 + q^2 = y2^r
    B2b  x^2 - q^2 = y1^r              x^2 + q^2 = p y2^r

with y = 2 y1 y2 resp. y = y1 y2. The branches are tried in that fixed
order by exact division and r-th root extraction; at most one can match
a coprime solution.
"""

from dataclasses import dataclass
from functools import partial
from typing import Optional

from quartic.arith import BudgetExceeded, exactRoot, gcd, integerNthRoot, isPrime
from quartic.cyclotomic import ( KummerSplitting, SplittingReport, SymbolValue,
                                 classifyKummerSplitting,
                                 powerResidueSymbolRational,
                                 splitPrimeInCyclotomic )
from quartic.log import debug
from quartic.util import InvalidArgument, QuarticError, Record, poolMap


SEARCH_BUDGET = 10 ** 7


class InvalidInstance( QuarticError ):
    "Raised for instances with a non-prime parameter or even r."


class NotASolution( QuarticError ):
    "Raised when a trace is asked for a pair that is not a coprime solution."


class NoBranchMatched( QuarticError ):
    """Raised when a solution fits none of the four factorizations.
       residuals: { branch: { a_remainder, b_remainder, a_power, b_power } }"""

    def __init__( self, message, residuals ):
        QuarticError.__init__( self, message )
        self.residuals = residuals


class Parity( object ):
    X_ODD = 'XOdd'
    X_EVEN = 'XEven'


class Branch( object ):
    B1A = 'B1a'
    B1B = 'B1b'
    B2A = 'B2a'
    B2B = 'B2b'


class Variant( object ):
    "Which r-divisibility condition guards coprimality of the ideal factors"
    PLAIN = 'Plain'
    TWO_POWER = 'TwoPower'


VARIANT_BY_BRANCH = { Branch.B1A: Variant.TWO_POWER,
                      Branch.B1B: Variant.TWO_POWER,
                      Branch.B2A: Variant.PLAIN,
                      Branch.B2B: Variant.PLAIN }

# branches whose x^2 + q^2 carries the factor p
P_IN_SUM = ( Branch.B1B, Branch.B2B )


@dataclass( frozen=True )
class EquationInstance( Record ):
    "Primes ( p, q, r ) of x^4 - q^4 = p*y^r; r odd"

    p: int
    q: int
    r: int

    def __post_init__( self ):
        for name in ( 'p', 'q', 'r' ):
            value = getattr( self, name )
            if not isPrime( value ):
                raise InvalidInstance( '%s = %d is not prime' % ( name, value ) )
        if self.r % 2 == 0:
            raise InvalidInstance( 'r = %d is even' % self.r )

    def branchDivisors( self ):
        """Exact divisors of ( x^2 - q^2, x^2 + q^2 ) per branch, in the
           order branches are tried"""
        p, r = self.p, self.r
        return ( ( Branch.B1A, 2 ** ( r - 1 ) * p, 2 ),
                 ( Branch.B1B, 2 ** ( r - 1 ), 2 * p ),
                 ( Branch.B2A, p, 1 ),
                 ( Branch.B2B, 1, p ) )


@dataclass( frozen=True )
class SolutionRecord( Record ):
    """Verdicts for one pair ( x, y ).
       p_divides_y is None unless the pair is a solution"""

    x: int
    y: int
    is_solution: bool
    coprime: bool
    xy_nonzero: bool
    p_divides_y: Optional[ bool ]
    residual: int

    def isCounterexample( self ):
        "A coprime solution with xy != 0 in which p does not divide y"
        return ( self.is_solution and self.coprime and self.xy_nonzero and
                 not self.p_divides_y )


@dataclass( frozen=True )
class HypothesisReport( Record ):
    """Divisibility hypotheses on ( y1, y2 ) under which the ideal factors
       of the trace are pairwise coprime.
       variant: Variant value; picks the r-condition and whether the
                p-condition reads p | y2 (Plain) or p | 2 y2 (TwoPower)
       satisfied: gcd is 1 and neither the p- nor the r-condition holds"""

    variant: str
    gcd_y1_y2_is_1: bool
    p_divides_y2: bool
    r_divides_y2_minus_y1: bool
    r_divides_y2_minus_2r2p_y1: bool
    satisfied: bool

    def failures( self ):
        "Names of the predicates that break the hypotheses"
        failed = []
        if not self.gcd_y1_y2_is_1:
            failed.append( 'gcd_y1_y2_is_1' )
        if self.p_divides_y2:
            failed.append( 'p_divides_y2' )
        if self.variant == Variant.PLAIN and self.r_divides_y2_minus_y1:
            failed.append( 'r_divides_y2_minus_y1' )
        if ( self.variant == Variant.TWO_POWER and
             self.r_divides_y2_minus_2r2p_y1 ):
            failed.append( 'r_divides_y2_minus_2r2p_y1' )
        return failed


@dataclass( frozen=True )
class KummerContext( Record ):
    """Splitting data for the Kummer field the trace works in.
       radicand: 2^(r-2) p for odd x, p for even x
       two_*: splitting of 2, recorded for even x only
       Entries are None where undefined for the instance."""

    radicand: int
    q_cyclotomic: Optional[ SplittingReport ]
    q_symbol: Optional[ SymbolValue ]
    q_kummer: Optional[ KummerSplitting ]
    two_cyclotomic: Optional[ SplittingReport ]
    two_symbol: Optional[ SymbolValue ]
    two_kummer: Optional[ KummerSplitting ]

    nested = { 'q_cyclotomic': SplittingReport,
               'q_symbol': SymbolValue,
               'q_kummer': KummerSplitting,
               'two_cyclotomic': SplittingReport,
               'two_symbol': SymbolValue,
               'two_kummer': KummerSplitting }


@dataclass( frozen=True )
class TraceReport( Record ):
    "The case split replayed on one coprime solution"

    x: int
    y: int
    parity_case: str
    d: int
    branch: str
    y1: int
    y2: int
    key_identity_holds: bool
    lemma_hypotheses: HypothesisReport
    contradiction_note: str
    kummer: KummerContext

    nested = { 'lemma_hypotheses': HypothesisReport,
               'kummer': KummerContext }


def evaluate( inst, x, y ):
    "x^4 - q^4 - p*y^r, exactly"
    return x ** 4 - inst.q ** 4 - inst.p * y ** inst.r


def verifySolution( inst, x, y ):
    """Check ( x, y ) against inst.
       returns: SolutionRecord"""
    residual = evaluate( inst, x, y )
    isSolution = residual == 0
    return SolutionRecord( x, y, isSolution, gcd( x, y ) == 1,
                           x * y != 0,
                           y % inst.p == 0 if isSolution else None,
                           residual )


def _solutionsAt( y, inst, xBound ):
    "Records for every x with |x| <= xBound solving inst at this y"
    t = inst.q ** 4 + inst.p * y ** inst.r
    if t < 0:
        return []
    root, exact = integerNthRoot( 4, t )
    if not exact or root > xBound:
        return []
    xs = [ 0 ] if root == 0 else [ -root, root ]
    return [ verifySolution( inst, x, y ) for x in xs ]


def searchSolutions( inst, yBound, xBound, budget=SEARCH_BUDGET, workers=1 ):
    """All solutions with |y| <= yBound and |x| <= xBound, degenerate
       ones included.
       budget: maximum number of y values
       workers: processes to split the y range across
       returns: list of SolutionRecord sorted by ( y, x )"""
    if yBound < 0 or xBound < 0:
        raise InvalidArgument( 'searchSolutions: bounds must be >= 0, got '
                               'yBound=%d, xBound=%d' % ( yBound, xBound ) )
    count = 2 * yBound + 1
    if count > budget:
        raise BudgetExceeded( '%d values of y exceed the budget of %d' %
                              ( count, budget ) )
    debug( '*** searchSolutions %s: y in [%d, %d], |x| <= %d\n' %
           ( ( inst.p, inst.q, inst.r ), -yBound, yBound, xBound ) )
    parts = poolMap( partial( _solutionsAt, inst=inst, xBound=xBound ),
                     range( -yBound, yBound + 1 ), workers=workers )
    records = [ record for part in parts for record in part ]
    return sorted( records, key=lambda record: ( record.y, record.x ) )


def lemmaHypotheses( y1, y2, p, r, variant ):
    """Evaluate the coprimality hypotheses on ( y1, y2 ).
       p, r: primes of the instance
       variant: Variant value
       returns: HypothesisReport"""
    if variant not in ( Variant.PLAIN, Variant.TWO_POWER ):
        raise InvalidArgument( 'unknown variant %r' % ( variant, ) )
    if r < 2:
        raise InvalidArgument( 'lemmaHypotheses: r must be >= 2, got %d' % r )
    coprime = gcd( y1, y2 ) == 1
    pDivides = ( y2 if variant == Variant.PLAIN else 2 * y2 ) % p == 0
    rPlain = ( y2 - y1 ) % r == 0
    rTwoPower = ( y2 - 2 ** ( r - 2 ) * p * y1 ) % r == 0
    rCondition = rPlain if variant == Variant.PLAIN else rTwoPower
    return HypothesisReport( variant, coprime, pDivides, rPlain, rTwoPower,
                             coprime and not pDivides and not rCondition )


def _keyIdentity( inst, branch, y1, y2 ):
    "x^2 + q^2 minus x^2 - q^2, restated in y1 and y2"
    p, q, r = inst.p, inst.q, inst.r
    if branch == Branch.B1A:
        return q ** 2 == y2 ** r - 2 ** ( r - 2 ) * p * y1 ** r
    if branch == Branch.B1B:
        return q ** 2 == p * y2 ** r - 2 ** ( r - 2 ) * y1 ** r
    if branch == Branch.B2A:
        return 2 * q ** 2 == y2 ** r - p * y1 ** r
    return 2 * q ** 2 == p * y2 ** r - y1 ** r


def _contradictionNote( inst, parity, branch, hypotheses ):
    "Stable tag naming the step of the argument this trace reaches"
    if branch in P_IN_SUM:
        if inst.p % 4 == 3:
            return ( '%s requires p | x^2+q^2, incompatible with '
                     'p = 3 (mod 4)' % branch )
        side = 'odd-x' if parity == Parity.X_ODD else 'even-x'
        return ( 'p = %d (mod 4): %s elimination of %s does not apply' %
                 ( inst.p % 4, side, branch ) )
    if hypotheses.satisfied:
        return ( '%s coprimality hypotheses hold: ideal factors pairwise '
                 'coprime' % hypotheses.variant )
    return ( '%s coprimality hypotheses fail: %s' %
             ( hypotheses.variant, ', '.join( hypotheses.failures() ) ) )


def _attempt( fn, *args ):
    "fn( *args ), or None where it is undefined"
    try:
        return fn( *args )
    except QuarticError as e:
        debug( '*** %s%s undefined: %s\n' % ( fn.__name__, args, e.reason() ) )
        return None


def kummerContext( inst, parity ):
    """Splitting of q (and for even x, of 2) in Z[zeta_r] and in the
       Kummer field of the radicand the trace works with.
       returns: KummerContext"""
    p, q, r = inst.p, inst.q, inst.r
    radicand = 2 ** ( r - 2 ) * p if parity == Parity.X_ODD else p
    qSplit = _attempt( splitPrimeInCyclotomic, q, r )
    qSymbol = _attempt( powerResidueSymbolRational, radicand, r, q )
    qKummer = _attempt( classifyKummerSplitting, radicand, r, q )
    twoSplit = twoSymbol = twoKummer = None
    if parity == Parity.X_EVEN:
        twoSplit = _attempt( splitPrimeInCyclotomic, 2, r )
        twoSymbol = _attempt( powerResidueSymbolRational, radicand, r, 2 )
        twoKummer = _attempt( classifyKummerSplitting, radicand, r, 2 )
    return KummerContext( radicand, qSplit, qSymbol, qKummer,
                          twoSplit, twoSymbol, twoKummer )


def decomposeSolution( inst, x, y ):
    """Trace a coprime solution with xy != 0 through the case split.
       returns: TraceReport
       raises NotASolution for other pairs, NoBranchMatched when no
       factorization fits"""
    record = verifySolution( inst, x, y )
    if not record.is_solution:
        raise NotASolution( '( %d, %d ) is not a solution: residual %d' %
                            ( x, y, record.residual ) )
    if not record.xy_nonzero:
        raise NotASolution( '( %d, %d ) is a degenerate solution: xy = 0' %
                            ( x, y ) )
    if not record.coprime:
        raise NotASolution( '( %d, %d ) is not coprime: gcd %d' %
                            ( x, y, gcd( x, y ) ) )
    q, r = inst.q, inst.r
    minus, plus = x ** 2 - q ** 2, x ** 2 + q ** 2
    parity = Parity.X_ODD if x % 2 else Parity.X_EVEN
    d = gcd( minus, plus )
    matches, residuals = [], {}
    for branch, divMinus, divPlus in inst.branchDivisors():
        y1 = y2 = None
        if minus % divMinus == 0:
            y1 = exactRoot( minus // divMinus, r )
        if plus % divPlus == 0:
            y2 = exactRoot( plus // divPlus, r )
        residuals[ branch ] = { 'a_remainder': minus % divMinus,
                                'b_remainder': plus % divPlus,
                                'a_power': y1 is not None,
                                'b_power': y2 is not None }
        if y1 is not None and y2 is not None:
            matches.append( ( branch, y1, y2 ) )
    if not matches:
        raise NoBranchMatched( '( %d, %d ) fits none of %s' %
                               ( x, y, ', '.join( sorted( residuals ) ) ),
                               residuals )
    assert len( matches ) == 1, 'several branches match: %s' % matches
    branch, y1, y2 = matches[ 0 ]
    assert y == ( y1 * y2 if branch in ( Branch.B2A, Branch.B2B )
                  else 2 * y1 * y2 )
    debug( '*** trace ( %d, %d ): %s, d=%d, %s, y1=%d, y2=%d\n' %
           ( x, y, parity, d, branch, y1, y2 ) )
    hypotheses = lemmaHypotheses( y1, y2, inst.p, r,
                                  VARIANT_BY_BRANCH[ branch ] )
    return TraceReport( x, y, parity, d, branch, y1, y2,
                        _keyIdentity( inst, branch, y1, y2 ), hypotheses,
                        _contradictionNote( inst, parity, branch, hypotheses ),
                        kummerContext( inst, parity ) )
