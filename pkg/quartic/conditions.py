"""
The hypotheses of the theorem on x^4 - q^4 = p*y^r, evaluated for one
prime triple ( p, q, r ) at a time or enumerated over ranges:

- p, q, r are distinct primes
- q != 2
- p = 3 (mod 4)
- p = 1 (mod r)
- r = 3 or 5 (mod 8)
- p generates U( Z/q**(r-1) )
- q generates ( Z/r )*
- 2 is an r-th power residue mod q

Triples are always ( p, q, r ): equation coefficient, subtracted fourth
power, exponent.
"""

from dataclasses import dataclass
from functools import partial
from typing import Optional

from sympy import primerange

from quartic.arith import ( BudgetExceeded, Factorization, NotPrime,
                            gcd, isGeneratorModPrimePower, isPrime,
                            liftedOrder, multiplicativeOrder )
from quartic.cyclotomic import ( SymbolTag, powerResidueSymbolRational,
                                 rthPowerResidueModPrime )
from quartic.log import debug
from quartic.util import InvalidArgument, QuarticError, Record, poolMap


SCAN_BUDGET = 10 ** 6

R_MOD8 = ( 3, 5 )


class GeneratorMethod( object ):
    "How a generator verdict was reached"
    LIFTED = 'lifted'
    FULL = 'full'


@dataclass( frozen=True )
class PrimeTriple( Record ):
    "( p, q, r ); primality is reported by checkConditions, not enforced"

    p: int
    q: int
    r: int

    def asTuple( self ):
        return ( self.p, self.q, self.r )


@dataclass( frozen=True )
class ResidueVerdict( Record ):
    "A residue and whether it is one of the required ones"

    residue: int
    holds: bool


@dataclass( frozen=True )
class GeneratorVerdict( Record ):
    """Does a base generate the units modulo `modulus`?
       order: order of the base at modulus; None when undefined
       group_order: order of the group of units
       method: GeneratorMethod value, or None for the small group"""

    holds: bool
    order: Optional[ int ]
    group_order: int
    modulus: int
    method: Optional[ str ] = None


@dataclass( frozen=True )
class ConditionReport( Record ):
    "Per-hypothesis verdicts for one triple"

    triple: PrimeTriple
    primes: bool
    distinct: bool
    q_not_two: bool
    p_mod4: ResidueVerdict
    p_mod_r: ResidueVerdict
    r_mod8: ResidueVerdict
    p_generates: GeneratorVerdict
    q_generates: GeneratorVerdict
    two_residue: bool
    two_residue_cyclotomic: Optional[ bool ]
    all_satisfied: bool

    nested = { 'triple': PrimeTriple,
               'p_mod4': ResidueVerdict,
               'p_mod_r': ResidueVerdict,
               'r_mod8': ResidueVerdict,
               'p_generates': GeneratorVerdict,
               'q_generates': GeneratorVerdict }

    def verdicts( self ):
        "The eight hypotheses in order, as ( name, holds ) pairs"
        return [ ( 'distinct', self.distinct ),
                 ( 'q_not_two', self.q_not_two ),
                 ( 'p_mod4', self.p_mod4.holds ),
                 ( 'p_mod_r', self.p_mod_r.holds ),
                 ( 'r_mod8', self.r_mod8.holds ),
                 ( 'p_generates', self.p_generates.holds ),
                 ( 'q_generates', self.q_generates.holds ),
                 ( 'two_residue', self.two_residue ) ]


def _pGenerates( p, q, r, fullOrder, **kwargs ):
    """Is p a generator of U( Z/q**(r-1) )?
       By default the verdict comes from q**2 and the witness order is
       lifted from the order of p mod q, so nothing is powered at the
       full modulus; fullOrder computes the order at q**(r-1) directly
       and checks the lifted order against it."""
    k = max( r - 1, 1 )
    modulus = q ** k
    groupOrder = q ** ( k - 1 ) * ( q - 1 ) if q > 1 else 0
    if q < 2 or not isPrime( q ) or r < 2 or p % q == 0:
        return GeneratorVerdict( False, None, groupOrder, modulus )
    if q == 2 or fullOrder or k <= 2:
        order = multiplicativeOrder(
            p, modulus, factorization=Factorization( modulus, ( ( q, k ), ) ),
            **kwargs )
        if q != 2:
            assert order == liftedOrder( p, q, k, **kwargs )
        return GeneratorVerdict( order == groupOrder, order, groupOrder,
                                 modulus, GeneratorMethod.FULL )
    order = liftedOrder( p, q, k, **kwargs )
    holds = isGeneratorModPrimePower( p, q, k, lift=True, **kwargs )
    return GeneratorVerdict( holds, order, groupOrder, modulus,
                             GeneratorMethod.LIFTED )


def _qGenerates( q, r, **kwargs ):
    "Is q a generator of ( Z/r )*?"
    groupOrder = max( r - 1, 0 )
    if r < 2 or not isPrime( r ) or gcd( q, r ) != 1:
        return GeneratorVerdict( False, None, groupOrder, r )
    if r == 2:
        return GeneratorVerdict( True, 1, 1, 2 )
    order = multiplicativeOrder( q, r, **kwargs )
    return GeneratorVerdict( order == groupOrder, order, groupOrder, r )


def _twoResidue( q, r ):
    "Prime-field reading: is x**r = 2 (mod q) solvable?"
    try:
        return rthPowerResidueModPrime( 2, r, q )
    except NotPrime:
        return False


def _twoResidueCyclotomic( q, r ):
    "Cyclotomic reading: is the power character of 2 at q trivial?"
    try:
        return powerResidueSymbolRational( 2, r, q ).tag == SymbolTag.ONE
    except QuarticError:
        return None


def checkConditions( p, q, r, fullOrder=False, **kwargs ):
    """Evaluate every hypothesis for the triple ( p, q, r ).
       fullOrder: decide the p-generator condition at q**(r-1) directly
                  instead of lifting from q**2
       kwargs: passed on to factorize()
       Inputs need not be prime; failures are flagged, not raised.
       returns: ConditionReport"""
    primes = all( isPrime( n ) for n in ( p, q, r ) )
    distinct = primes and len( { p, q, r } ) == 3
    qNotTwo = q != 2
    pMod4 = ResidueVerdict( p % 4, p % 4 == 3 )
    pModR = ResidueVerdict( p % r, r > 1 and p % r == 1 ) if r > 0 else \
        ResidueVerdict( p, False )
    rMod8 = ResidueVerdict( r % 8, r % 8 in R_MOD8 )
    pGenerates = _pGenerates( p, q, r, fullOrder, **kwargs )
    qGenerates = _qGenerates( q, r, **kwargs )
    twoResidue = _twoResidue( q, r )
    twoResidueCyclotomic = _twoResidueCyclotomic( q, r )
    allSatisfied = all( ( distinct, qNotTwo, pMod4.holds, pModR.holds,
                          rMod8.holds, pGenerates.holds, qGenerates.holds,
                          twoResidue ) )
    debug( '*** conditions %s: %s\n' %
           ( ( p, q, r ), 'satisfied' if allSatisfied else 'not satisfied' ) )
    return ConditionReport( PrimeTriple( p, q, r ), primes, distinct, qNotTwo,
                            pMod4, pModR, rMod8, pGenerates, qGenerates,
                            twoResidue, twoResidueCyclotomic, allSatisfied )


def _cheap( p, q, r ):
    "The conditions that need no modular powers"
    return ( len( { p, q, r } ) == 3 and q != 2 and p % 4 == 3 and
             p % r == 1 and r % 8 in R_MOD8 )


def _checkCandidate( triple, fullOrder=False ):
    "Worker body for enumerateTriples"
    return checkConditions( *triple, fullOrder=fullOrder )


def enumerateTriples( pMax, qMax, rMax, budget=SCAN_BUDGET, fullOrder=False,
                      workers=1 ):
    """All prime triples with p <= pMax, q <= qMax, r <= rMax that
       satisfy every hypothesis.
       budget: maximum number of candidate triples
       workers: processes to check candidates in
       returns: list of ConditionReport sorted by ( p, q, r )"""
    for name, bound in ( ( 'pMax', pMax ), ( 'qMax', qMax ),
                         ( 'rMax', rMax ) ):
        if bound < 2:
            raise InvalidArgument( 'enumerateTriples: %s must be >= 2, '
                                   'got %d' % ( name, bound ) )
    ps, qs, rs = ( list( primerange( 2, bound + 1 ) )
                   for bound in ( pMax, qMax, rMax ) )
    candidates = len( ps ) * len( qs ) * len( rs )
    if candidates > budget:
        raise BudgetExceeded( '%d candidate triples exceed the budget of %d' %
                              ( candidates, budget ) )
    cheap = [ ( p, q, r ) for p in ps for q in qs for r in rs
              if _cheap( p, q, r ) ]
    debug( '*** enumerateTriples: %d candidates, %d pass the residue '
           'conditions\n' % ( candidates, len( cheap ) ) )
    reports = poolMap( partial( _checkCandidate, fullOrder=fullOrder ),
                       cheap, workers=workers )
    found = [ report for report in reports if report.all_satisfied ]
    return sorted( found, key=lambda report: report.triple.asTuple() )
