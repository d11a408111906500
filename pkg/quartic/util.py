"Utility functions for quartic."

from dataclasses import asdict, fields
from functools import partial
from multiprocessing import Pool, cpu_count

from more_itertools import chunked

from quartic.log import debug


class QuarticError( Exception ):
    """Base class for errors raised by quartic.
       The message is one line; the cli prints it as
       'error: <class name>: <message>'."""

    def reason( self ):
        "One-line machine-parsable reason"
        return '%s: %s' % ( type( self ).__name__, self )


class InvalidArgument( QuarticError, ValueError ):
    "Raised when an argument violates a documented precondition."


class Record( object ):
    """Mixin for the frozen dataclass records quartic returns.
       Records convert to plain dicts for reports and back again;
       `nested` maps a field name to the Record class stored in it."""

    nested = {}

    def asDict( self ):
        return asdict( self )

    @classmethod
    def fromDict( cls, d ):
        kwargs = {}
        for field in fields( cls ):
            value = d[ field.name ]
            sub = cls.nested.get( field.name )
            if sub is not None and value is not None:
                value = sub.fromDict( value )
            kwargs[ field.name ] = value
        return cls( **kwargs )


def irange( start, end ):
    """Inclusive range from start to end (vs. Python insanity.)
       irange(1,5) -> 1, 2, 3, 4, 5"""
    return range( start, end + 1 )


def numCores():
    "Returns number of CPU cores"
    if hasattr( numCores, 'ncores' ):
        return numCores.ncores
    try:
        numCores.ncores = cpu_count()
    except NotImplementedError:
        return 1
    return numCores.ncores


def _runChunk( fn, chunk ):
    "Worker body: apply fn to every item of one chunk."
    return [ fn( item ) for item in chunk ]


def poolMap( fn, items, workers=1, chunkSize=None ):
    """Map fn over items, optionally in worker processes.
       fn: picklable (module-level) function of one item
       items: sequence of items
       workers: number of processes; 1 runs in this process
       chunkSize: items per task (default: spread evenly over workers)
       returns: list of results, in the order of items"""
    items = list( items )
    if workers is None or workers <= 1 or len( items ) < 2:
        return [ fn( item ) for item in items ]
    workers = min( workers, numCores() or 1, len( items ) )
    if chunkSize is None:
        chunkSize = max( 1, -( -len( items ) // ( workers * 4 ) ) )
    chunks = list( chunked( items, chunkSize ) )
    debug( '*** poolMap: %d items in %d chunks on %d workers\n' %
           ( len( items ), len( chunks ), workers ) )
    with Pool( workers ) as pool:
        parts = pool.map( partial( _runChunk, fn ), chunks )
    return [ result for part in parts for result in part ]
