"""
The quartic command line.

Each invocation runs one command and writes one report:

quartic check 19 11 3
quartic verify 17 3 5 5 2 --json
quartic scan --p-max 70 --q-max 15 --r-max 12 --csv triples.csv
quartic trace 257 17 7 15 -2

Reports go to standard output (or --out FILE) as a text table, or as
JSON with --json. Log messages and errors go to standard error.

Exit codes: 0 when the command computed its result, 1 when the library
rejected the input (the error stream then carries one line
'error: <ErrorClass>: <message>'), 2 for usage errors.
"""

from argparse import ArgumentParser
from cmd import Cmd
from time import perf_counter
import sys

from quartic import VERSION
from quartic.arith import isGeneratorModPrimePower, multiplicativeOrder
from quartic.conditions import checkConditions, enumerateTriples
from quartic.cyclotomic import ( classifyKummerSplitting,
                                 powerResidueSymbolRational,
                                 rthPowerResidueModPrime,
                                 splitPrimeInCyclotomic )
from quartic.diophantine import ( EquationInstance, decomposeSolution,
                                  searchSolutions, verifySolution )
from quartic.log import LEVELS, debug, lg, setLogLevel
from quartic.report import Report, renderText, writeTriplesCsv
from quartic.util import QuarticError


# flags that shape the report rather than the result
PRESENTATION = ( 'json', 'out', 'verbosity', 'csv', 'workers' )


class UsageError( Exception ):
    "Raised by our argument parsers instead of exiting."


class ArgParser( ArgumentParser ):
    "ArgumentParser that raises UsageError rather than exiting on errors"

    def error( self, message ):
        raise UsageError( '%s: %s' % ( self.prog, message ) )


def globalFlags():
    "Flags every command accepts"
    parser = ArgParser( add_help=False )
    parser.add_argument( '--json', action='store_true',
                         help='write the report as JSON' )
    parser.add_argument( '--out', metavar='FILE',
                         help='write the report to FILE' )
    parser.add_argument( '--full-order', action='store_true',
                         help='decide generators at the full modulus '
                         'instead of lifting from q**2' )
    parser.add_argument( '--budget', metavar='N', type=int,
                         help='maximum candidates (scan) or y values (search)' )
    parser.add_argument( '--workers', metavar='N', type=int, default=1,
                         help='worker processes for scan and search' )
    parser.add_argument( '-v', '--verbosity', default='output',
                         choices=sorted( LEVELS ),
                         help='log level: ' + ', '.join( sorted( LEVELS ) ) )
    return parser


# positional integer arguments of each command
POSITIONALS = {
    'check': ( 'p', 'q', 'r' ),
    'scan': (),
    'verify': ( 'p', 'q', 'r', 'x', 'y' ),
    'search': ( 'p', 'q', 'r' ),
    'trace': ( 'p', 'q', 'r', 'x', 'y' ),
    'split': ( 'p', 'l' ),
    'symbol': ( 'a', 'r', 'q' ),
    'order': ( 'a', 'n' ),
    'generator': ( 'a', 'q', 'k' ),
    'residue': ( 'a', 'r', 'q' ),
}


class CLI( Cmd ):
    "Command-line interface to quartic: one command per invocation."

    helpStr = (
        'Numbers are decimal integers; negative values such as -2 are\n'
        'accepted where the command allows them. Every command takes\n'
        '--json, --out FILE, --full-order, --budget N, --workers N and\n'
        '-v LEVEL. Run "quartic <command> --help" for its arguments.\n'
    )

    def __init__( self, stdout=None, stderr=None ):
        Cmd.__init__( self, stdout=stdout or sys.stdout )
        self.stderr = stderr or sys.stderr
        self.parsers = self.makeParsers()

    def makeParsers( self ):
        "One parser per command, sharing the global flags"
        parent = globalFlags()
        parsers = {}
        for command, names in POSITIONALS.items():
            method = getattr( self, 'do_' + command )
            parser = ArgParser( prog='quartic ' + command,
                                description=method.__doc__,
                                parents=[ parent ] )
            for name in names:
                parser.add_argument( name, type=int )
            parsers[ command ] = parser
        scan = parsers[ 'scan' ]
        for bound in ( 'p', 'q', 'r' ):
            scan.add_argument( '--%s-max' % bound, type=int, required=True,
                               metavar='N' )
        scan.add_argument( '--csv', metavar='FILE',
                           help='also write the triples as p,q,r rows' )
        search = parsers[ 'search' ]
        search.add_argument( '--y-bound', type=int, required=True,
                             metavar='N' )
        search.add_argument( '--x-bound', type=int, required=True,
                             metavar='N' )
        return parsers

    def usage( self ):
        "Short usage line naming the commands"
        return ( 'usage: quartic [--version] [--help] <command> [args]\n'
                 'commands: %s\n' % ' '.join( POSITIONALS ) )

    def run( self, argv ):
        """Run the command in argv.
           argv: arguments without the program name
           returns: exit code"""
        if not argv:
            self.stderr.write( self.usage() )
            return 2
        command, rest = argv[ 0 ], argv[ 1: ]
        if command == '--version':
            self.stdout.write( 'quartic %s\n' % VERSION )
            return 0
        if command in ( '-h', '--help', 'help' ):
            self.do_help( ' '.join( rest ) )
            return 0
        if command not in self.parsers:
            self.stderr.write( 'usage error: unknown command %r\n%s' %
                               ( command, self.usage() ) )
            return 2
        try:
            args = self.parsers[ command ].parse_args( rest )
        except UsageError as e:
            self.stderr.write( 'usage error: %s\n' % e )
            return 2
        except SystemExit as e:
            # --help
            return e.code or 0
        setLogLevel( args.verbosity )
        lg.setStream( self.stderr )
        start = perf_counter()
        try:
            outputs = getattr( self, 'do_' + command )( args )
        except QuarticError as e:
            self.stderr.write( 'error: %s\n' % e.reason() )
            return 1
        elapsed = int( round( ( perf_counter() - start ) * 1000 ) )
        debug( '*** %s finished in %d ms\n' % ( command, elapsed ) )
        inputs = { key: value for key, value in vars( args ).items()
                   if key not in PRESENTATION }
        report = Report( command, inputs, outputs, elapsed )
        try:
            self.emit( report, args )
        except OSError as e:
            self.stderr.write( 'error: %s: %s\n' % ( type( e ).__name__, e ) )
            return 1
        return 0

    def emit( self, report, args ):
        "Write report (and for scan, the CSV table) where args ask."
        text = report.toJson() if args.json else renderText( report )
        if args.out:
            with open( args.out, 'w', encoding='utf-8' ) as f:
                f.write( text )
        else:
            self.stdout.write( text )
        if getattr( args, 'csv', None ):
            with open( args.csv, 'w', encoding='utf-8', newline='' ) as f:
                writeTriplesCsv( report.outputs[ 'triples' ], f )

    # Commands: each takes the parsed arguments and returns the outputs

    def do_help( self, line ):  # pylint: disable=arguments-differ
        "Describe available commands."
        line = line.strip()
        if line in self.parsers:
            self.stdout.write( self.parsers[ line ].format_help() )
            return
        self.stdout.write( self.usage() + '\n' )
        for command in POSITIONALS:
            doc = getattr( self, 'do_' + command ).__doc__
            self.stdout.write( '  %-10s %s\n' % ( command, doc ) )
        self.stdout.write( '\n' + self.helpStr )

    def do_check( self, args ):
        "Evaluate the hypotheses for the triple p q r."
        return checkConditions( args.p, args.q, args.r,
                                fullOrder=args.full_order ).asDict()

    def do_scan( self, args ):
        "List the triples up to --p-max, --q-max, --r-max satisfying them all."
        kwargs = { 'fullOrder': args.full_order, 'workers': args.workers }
        if args.budget is not None:
            kwargs[ 'budget' ] = args.budget
        reports = enumerateTriples( args.p_max, args.q_max, args.r_max,
                                    **kwargs )
        return { 'triples': [ report.asDict() for report in reports ] }

    def do_verify( self, args ):
        "Check the pair x y against x^4 - q^4 = p*y^r."
        inst = EquationInstance( args.p, args.q, args.r )
        return verifySolution( inst, args.x, args.y ).asDict()

    def do_search( self, args ):
        "All solutions with |y| <= --y-bound and |x| <= --x-bound."
        inst = EquationInstance( args.p, args.q, args.r )
        kwargs = { 'workers': args.workers }
        if args.budget is not None:
            kwargs[ 'budget' ] = args.budget
        records = searchSolutions( inst, args.y_bound, args.x_bound, **kwargs )
        return { 'solutions': [ record.asDict() for record in records ] }

    def do_trace( self, args ):
        "Replay the case split on the coprime solution x y."
        inst = EquationInstance( args.p, args.q, args.r )
        return decomposeSolution( inst, args.x, args.y ).asDict()

    def do_split( self, args ):
        "Decompose the prime p in the ring of l-th roots of unity."
        return splitPrimeInCyclotomic( args.p, args.l ).asDict()

    def do_symbol( self, args ):
        "r-th power character of a at q, and the Kummer splitting of q."
        return { 'symbol': powerResidueSymbolRational(
                     args.a, args.r, args.q ).asDict(),
                 'kummer': classifyKummerSplitting(
                     args.a, args.r, args.q ).asDict() }

    def do_order( self, args ):
        "Multiplicative order of a modulo n."
        return { 'a': args.a, 'n': args.n,
                 'order': multiplicativeOrder( args.a, args.n ) }

    def do_generator( self, args ):
        "Does a generate the units modulo q**k?"
        lift = not args.full_order
        return { 'a': args.a, 'q': args.q, 'k': args.k,
                 'generator': isGeneratorModPrimePower( args.a, args.q,
                                                        args.k, lift=lift ),
                 'method': 'lifted' if lift and args.k > 2 else 'full' }

    def do_residue( self, args ):
        "Is a an r-th power modulo the prime q?"
        return { 'a': args.a, 'r': args.r, 'q': args.q,
                 'residue': rthPowerResidueModPrime( args.a, args.r,
                                                     args.q ) }


def run( argv=None, stdout=None, stderr=None ):
    """Entry point of the quartic script.
       argv: arguments without the program name (default sys.argv[1:])
       returns: exit code"""
    if argv is None:
        argv = sys.argv[ 1: ]
    return CLI( stdout=stdout, stderr=stderr ).run( list( argv ) )
