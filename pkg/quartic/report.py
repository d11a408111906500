"""
Reports written by the quartic command line.

Every command produces one Report: the command name, its inputs, the
outputs (plain dicts mirroring the library records) and the wall time.
Reports are written as key-sorted JSON, or rendered as a short
human-readable text; scan can also write its triples as CSV.
"""

import csv
import json
from dataclasses import asdict, dataclass

from quartic.conditions import ConditionReport
from quartic.cyclotomic import KummerSplitting, SplittingReport, SymbolValue
from quartic.diophantine import SolutionRecord, TraceReport
from quartic.util import InvalidArgument


SCHEMA_VERSION = '1'

CSV_HEADER = ( 'p', 'q', 'r' )


def _listOf( cls, key ):
    "Decoder for outputs holding a list of records under key"
    return lambda outputs: [ cls.fromDict( d ) for d in outputs[ key ] ]


DECODERS = {
    'check': ConditionReport.fromDict,
    'scan': _listOf( ConditionReport, 'triples' ),
    'verify': SolutionRecord.fromDict,
    'search': _listOf( SolutionRecord, 'solutions' ),
    'trace': TraceReport.fromDict,
    'split': SplittingReport.fromDict,
    'symbol': lambda outputs: ( SymbolValue.fromDict( outputs[ 'symbol' ] ),
                                KummerSplitting.fromDict( outputs[ 'kummer' ] ) )
}


@dataclass
class Report( object ):
    """Result envelope of one command.
       inputs: command arguments by name
       outputs: the result as plain JSON-compatible values
       timing_ms: wall time of the computation; excluded from comparisons
                  of results"""

    command: str
    inputs: dict
    outputs: dict
    timing_ms: int = 0
    schema_version: str = SCHEMA_VERSION

    def toJson( self ):
        "Stable text form: sorted keys, two-space indent, final newline"
        return json.dumps( asdict( self ), sort_keys=True, indent=2 ) + '\n'

    @classmethod
    def fromJson( cls, text ):
        d = json.loads( text )
        return cls( d[ 'command' ], d[ 'inputs' ], d[ 'outputs' ],
                    d[ 'timing_ms' ], d[ 'schema_version' ] )

    def record( self ):
        """The library value the outputs were built from; scalar
           commands have no record type and return the outputs dict"""
        decode = DECODERS.get( self.command )
        return self.outputs if decode is None else decode( self.outputs )


# Text rendering

def _yes( flag ):
    if flag is None:
        return 'n/a'
    return 'yes' if flag else 'no'


def _orderNote( verdict ):
    "'order 110 of 110, lifted' or 'order undefined'"
    if verdict[ 'order' ] is None:
        return 'order undefined'
    note = 'order %d of %d' % ( verdict[ 'order' ], verdict[ 'group_order' ] )
    if verdict.get( 'method' ):
        note += ', %s' % verdict[ 'method' ]
    return note


def conditionLines( c ):
    """The per-hypothesis table for one ConditionReport dict
       returns: list of lines (without newlines)"""
    t = c[ 'triple' ]
    p, q, r = t[ 'p' ], t[ 'q' ], t[ 'r' ]
    pGen, qGen = c[ 'p_generates' ], c[ 'q_generates' ]
    return [
        'conditions for p = %d, q = %d, r = %d' % ( p, q, r ),
        '  p, q, r distinct primes: %s' % _yes( c[ 'distinct' ] ),
        '  q ≠ 2: %s' % _yes( c[ 'q_not_two' ] ),
        '  p ≡ 3 (mod 4): %s (%d ≡ %d)' %
        ( _yes( c[ 'p_mod4' ][ 'holds' ] ), p, c[ 'p_mod4' ][ 'residue' ] ),
        '  p ≡ 1 (mod r): %s (%d ≡ %d (mod %d))' %
        ( _yes( c[ 'p_mod_r' ][ 'holds' ] ), p, c[ 'p_mod_r' ][ 'residue' ],
          r ),
        '  r ≡ ±3 (mod 8): %s (%d ≡ %d)' %
        ( _yes( c[ 'r_mod8' ][ 'holds' ] ), r, c[ 'r_mod8' ][ 'residue' ] ),
        '  p generates U(Z_%d): %s (%s)' %
        ( pGen[ 'modulus' ], _yes( pGen[ 'holds' ] ), _orderNote( pGen ) ),
        '  q generates Z_%d*: %s (%s)' %
        ( qGen[ 'modulus' ], _yes( qGen[ 'holds' ] ), _orderNote( qGen ) ),
        '  2 is an r-power residue mod q: %s (cyclotomic reading: %s)' %
        ( _yes( c[ 'two_residue' ] ), _yes( c[ 'two_residue_cyclotomic' ] ) ),
        '  all satisfied: %s' % _yes( c[ 'all_satisfied' ] ) ]


def _solutionLine( s ):
    flags = [ name for name in ( 'coprime', 'xy_nonzero', 'p_divides_y' )
              if s[ name ] ]
    return '  x = %d, y = %d%s' % ( s[ 'x' ], s[ 'y' ],
                                    ' (%s)' % ', '.join( flags ) if flags
                                    else '' )


def _flatten( value, prefix='' ):
    "Dotted key: value lines for a nested dict"
    if not isinstance( value, dict ):
        return [ '%s: %s' % ( prefix, 'n/a' if value is None else value ) ]
    lines = []
    for key in sorted( value ):
        name = '%s.%s' % ( prefix, key ) if prefix else key
        lines += _flatten( value[ key ], name )
    return lines


def renderText( report ):
    "Human-readable form of a Report, ending in a newline"
    outputs = report.outputs
    if report.command == 'check':
        lines = conditionLines( outputs )
    elif report.command == 'scan':
        triples = outputs[ 'triples' ]
        lines = [ '%d satisfying triples' % len( triples ) ]
        lines += [ '  p = %d, q = %d, r = %d' %
                   ( c[ 'triple' ][ 'p' ], c[ 'triple' ][ 'q' ],
                     c[ 'triple' ][ 'r' ] ) for c in triples ]
    elif report.command == 'search':
        solutions = outputs[ 'solutions' ]
        lines = [ '%d solutions' % len( solutions ) ]
        lines += [ _solutionLine( s ) for s in solutions ]
    else:
        lines = _flatten( outputs )
    return '\n'.join( lines ) + '\n'


# CSV

def writeTriplesCsv( reports, stream ):
    """Write one p,q,r row per ConditionReport dict, after a header.
       stream: text stream opened with newline=''"""
    writer = csv.writer( stream, lineterminator='\n' )
    writer.writerow( CSV_HEADER )
    for c in reports:
        t = c[ 'triple' ]
        writer.writerow( ( t[ 'p' ], t[ 'q' ], t[ 'r' ] ) )


def readTriplesCsv( stream ):
    "Inverse of writeTriplesCsv: list of ( p, q, r )"
    rows = list( csv.reader( stream ) )
    if not rows or tuple( rows[ 0 ] ) != CSV_HEADER:
        raise InvalidArgument( 'not a triple table: header %s' %
                               ( rows[ 0 ] if rows else None ) )
    return [ tuple( int( v ) for v in row ) for row in rows[ 1: ] ]
