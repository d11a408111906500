"Logging functions for quartic."

import logging
import sys
from logging import Logger


# 'output' sits between info and warning: it is what a user of the
# command line sees by default, while info and debug narrate the
# computation itself.
OUTPUT = 25

LEVELS = { 'debug': logging.DEBUG,
           'info': logging.INFO,
           'output': OUTPUT,
           'warning': logging.WARNING,
           'warn': logging.WARNING,
           'error': logging.ERROR,
           'critical': logging.CRITICAL }

# change this to logging.INFO to see the computation narrated in tests
LOGLEVELDEFAULT = OUTPUT

LOGMSGFORMAT = '%(message)s'


class StreamHandlerNoNewline( logging.StreamHandler ):
    """StreamHandler that doesn't append newlines.
       Callers put their own '\\n' at the end of a message, which lets
       progress dots and partial lines share one output line."""

    terminator = ''

    def emit( self, record ):
        "Write the formatted record to our stream."
        try:
            self.stream.write( self.format( record ) )
            self.flush()
        except ( KeyboardInterrupt, SystemExit ):
            raise
        except Exception:  # pylint: disable=broad-except
            self.handleError( record )


class QuarticLogger( Logger ):
    """quartic-specific logger
       Each module gets logging with one import:

       from quartic.log import debug

       Log records go to the error stream; reports are written to
       standard output by the cli, never through the logger."""

    def __init__( self, name='quartic' ):
        Logger.__init__( self, name )
        ch = StreamHandlerNoNewline( sys.stderr )
        ch.setFormatter( logging.Formatter( LOGMSGFORMAT ) )
        self.addHandler( ch )
        self.ch = ch
        self.propagate = False
        self.setLogLevel()

    def setLogLevel( self, levelname=None ):
        """Set log level.
           levelname: level name from LEVELS (lowercase); None for default"""
        if levelname and levelname not in LEVELS:
            raise ValueError( 'setLogLevel: unknown levelname %s '
                              '(choose from %s)' %
                              ( levelname, ', '.join( sorted( LEVELS ) ) ) )
        level = LEVELS.get( levelname, LOGLEVELDEFAULT )
        self.setLevel( level )
        self.ch.setLevel( level )

    def setStream( self, stream ):
        "Redirect our handler, e.g. to capture log output in tests."
        self.ch.setStream( stream )

    def output( self, msg, *args, **kwargs ):
        "Log 'msg % args' with severity 'OUTPUT'."
        if self.isEnabledFor( OUTPUT ):
            self._log( OUTPUT, msg, args, **kwargs )


def makeListCompatible( fn ):
    """Return a new function allowing fn( 'a 1 b' ) to be called as
       newfn( 'a', 1, 'b' )"""

    def newfn( *args ):
        "Join args with spaces and log them."
        if len( args ) == 1:
            return fn( *args )
        return fn( ' '.join( str( arg ) for arg in args ) )

    newfn.__name__ = fn.__name__
    newfn.__doc__ = fn.__doc__
    return newfn


logging.addLevelName( OUTPUT, 'OUTPUT' )
_previousClass = logging.getLoggerClass()
logging.setLoggerClass( QuarticLogger )
lg = logging.getLogger( 'quartic' )
logging.setLoggerClass( _previousClass )

_loggers = lg.info, lg.output, lg.warning, lg.error, lg.debug
_loggers = tuple( makeListCompatible( logger ) for logger in _loggers )
lg.info, lg.output, lg.warning, lg.error, lg.debug = _loggers
# the library narrates with debug only; errors reach the cli as exceptions
debug = lg.debug
setLogLevel = lg.setLogLevel
