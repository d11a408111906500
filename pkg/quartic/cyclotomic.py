"""
cyclotomic.py: splitting of rational primes in cyclotomic and Kummer rings

For a prime p and a conductor l with p not dividing l, p splits in
Z[zeta_l] into g = phi( l ) / f distinct primes of residual degree
f = ord_l( p ), each unramified. The only ramified case handled is
l = p, where p is totally ramified (e = p - 1).

Above Z[zeta_r] the Kummer ring of Q( zeta_r, a**(1/r) ) is governed by
the r-th power character {a/P}: 0 means P becomes an r-th power, 1
means P splits into r primes, any other r-th root of unity means P
stays prime. For a rational base the character can be computed inside
the prime field Z/q, which is all this module does; there is no ideal
arithmetic here.

Records:

SplittingReport: e, f, g and the norm p**f of a prime in Z[zeta_l]
SymbolValue: the character value, as its witness residue mod q
KummerSplitting: the induced splitting type, with degrees over Q
"""

from dataclasses import dataclass
from typing import Optional

from quartic.arith import ( NotCoprime, NotPrime, eulerPhi, exactRoot,
                            factorize, gcd, isPrime, multiplicativeOrder,
                            powMod )
from quartic.log import debug
from quartic.util import QuarticError, Record


class UnsupportedConductor( QuarticError ):
    "Raised for conductors where p ramifies other than as l = p."


class RamifiedModulus( QuarticError ):
    "Raised when the symbol is asked for at q = r."


class NotCoprimeConductor( QuarticError ):
    "Raised when q and the exponent r share a factor."


class SymbolTag( object ):
    "Values of the power character"
    ZERO = 'Zero'
    ONE = 'One'
    NONTRIVIAL = 'Nontrivial'


class KummerKind( object ):
    "Splitting types of a prime of Z[zeta_r] in the Kummer ring"
    RAMIFIED_POWER = 'RamifiedPower'
    SPLITS_COMPLETELY = 'SplitsCompletely'
    INERT = 'Inert'


KIND_BY_TAG = { SymbolTag.ZERO: KummerKind.RAMIFIED_POWER,
                SymbolTag.ONE: KummerKind.SPLITS_COMPLETELY,
                SymbolTag.NONTRIVIAL: KummerKind.INERT }


@dataclass( frozen=True )
class SplittingReport( Record ):
    """Decomposition of a rational prime in Z[zeta_l].
       e * f * g = phi( conductor ), norm = rational_prime**f"""

    rational_prime: int
    conductor: int
    e: int
    f: int
    g: int
    norm: int


@dataclass( frozen=True )
class SymbolValue( Record ):
    """r-th power character of a rational base at q.
       tag: SymbolTag value
       witness: a**E mod q for the reduced exponent E; None for Zero"""

    tag: str
    witness: Optional[ int ]


@dataclass( frozen=True )
class KummerSplitting( Record ):
    """Splitting of q in the Kummer field Q( zeta_r, radicand**(1/r) ).
       kind: KummerKind value
       e, f, g: decomposition of q over Q; e * f * g = degree
       degenerate: radicand is an r-th power in Z, so the field is
                   just Q( zeta_r )"""

    radicand: int
    r: int
    q: int
    kind: str
    e: int
    f: int
    g: int
    degree: int
    degenerate: bool


def _requirePrime( n, role ):
    "Raise NotPrime unless n is prime."
    if not isPrime( n ):
        raise NotPrime( '%s = %d is not prime' % ( role, n ) )


def _requireOddPrime( n, role ):
    "Raise NotPrime unless n is an odd prime."
    if n == 2 or not isPrime( n ):
        raise NotPrime( '%s = %d is not an odd prime' % ( role, n ) )


def splitPrimeInCyclotomic( p, l ):
    """Decompose p in Z[zeta_l].
       p: prime
       l: conductor >= 3, coprime to p or equal to p
       returns: SplittingReport"""
    _requirePrime( p, 'p' )
    if l < 3:
        raise UnsupportedConductor( 'conductor must be >= 3, got %d' % l )
    phi = eulerPhi( factorize( l ) )
    if gcd( p, l ) == 1:
        f = multiplicativeOrder( p, l )
        e, g = 1, phi // f
    elif l == p:
        e, f, g = p - 1, 1, 1
    else:
        raise UnsupportedConductor( '%d divides conductor %d; only l = p '
                                    'is supported' % ( p, l ) )
    return SplittingReport( p, l, e, f, g, p ** f )


def isQuadraticResidue( a, q ):
    """Euler's criterion.
       a: integer coprime to q
       q: odd prime"""
    _requireOddPrime( q, 'q' )
    if gcd( a, q ) != 1:
        raise NotCoprime( '%d is not invertible modulo %d' % ( a, q ) )
    return powMod( a, ( q - 1 ) // 2, q ) == 1


def rthPowerResidueModPrime( a, r, q ):
    """Is x**r = a (mod q) solvable?
       r: prime
       q: odd prime
       The r-th powers of ( Z/q )* form the subgroup of index
       gcd( r, q - 1 ), so when r does not divide q - 1 everything is
       an r-th power."""
    _requirePrime( r, 'r' )
    _requireOddPrime( q, 'q' )
    if a % q == 0:
        return True
    return powMod( a, ( q - 1 ) // gcd( r, q - 1 ), q ) == 1


def _residualDegree( q, r ):
    "Residual degree of q in Z[zeta_r]: ord_r( q ) (1 when r = 2)"
    if r == 2:
        return 1
    return multiplicativeOrder( q, r )


def powerResidueSymbolRational( a, r, q ):
    """r-th power character of the rational a at the primes above q in
       Z[zeta_r].
       a: any integer
       r: prime exponent
       q: prime different from r
       With f = ord_r( q ) the norm of a prime above q is q**f, and the
       character is a**( ( q**f - 1 ) / r ) taken in the residue field.
       Since a lies in the prime field Z/q the exponent can be reduced
       mod q - 1, which keeps the computation small even for large f.
       returns: SymbolValue"""
    _requirePrime( r, 'r' )
    _requirePrime( q, 'q' )
    if q == r:
        raise RamifiedModulus( 'q = r = %d ramifies in Z[zeta_%d]' % ( q, r ) )
    if gcd( q, r ) != 1:
        raise NotCoprimeConductor( 'gcd( %d, %d ) != 1' % ( q, r ) )
    if a % q == 0:
        return SymbolValue( SymbolTag.ZERO, None )
    f = _residualDegree( q, r )
    exponent = ( ( q ** f - 1 ) // r ) % ( q - 1 )
    witness = powMod( a, exponent, q )
    debug( '*** symbol {%d/(%d)}_%d: f=%d, E=%d, witness %d\n' %
           ( a, q, r, f, exponent, witness ) )
    tag = SymbolTag.ONE if witness == 1 else SymbolTag.NONTRIVIAL
    return SymbolValue( tag, witness )


def _cyclotomicDegrees( q, r ):
    "( e, f, g ) of q in Z[zeta_r]; Z[zeta_2] = Z"
    if r == 2:
        return 1, 1, 1
    split = splitPrimeInCyclotomic( q, r )
    return split.e, split.f, split.g


def classifyKummerSplitting( a, r, q ):
    """Splitting type of the primes above q in the Kummer ring of
       Q( zeta_r, a**(1/r) ), read off the power character.
       Preconditions as powerResidueSymbolRational().
       returns: KummerSplitting"""
    symbol = powerResidueSymbolRational( a, r, q )
    kind = KIND_BY_TAG[ symbol.tag ]
    e, f, g = _cyclotomicDegrees( q, r )
    degenerate = exactRoot( a, r ) is not None
    if degenerate:
        degree = r - 1
    else:
        degree = r * ( r - 1 )
        if kind == KummerKind.RAMIFIED_POWER:
            e *= r
        elif kind == KummerKind.SPLITS_COMPLETELY:
            g *= r
        else:
            f *= r
    return KummerSplitting( a, r, q, kind, e, f, g, degree, degenerate )
