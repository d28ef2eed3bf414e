"""
Command-line interface
The click group carries one RunConfig, built from Config and the global
flags; each command narrows it with its own flags.
"""

# Standard library imports
import functools
import logging
from dataclasses import dataclass, replace
from typing import Optional

# Third-party imports
import click

# Local imports
from .. import init_app
from ..config import Config
from ..errors import CyclodiffError, InputError
from ..ring.params import ClassTuple
from ..utils.cache import IndexCache

logger = logging.getLogger(__name__)

EPSILON_CHOICES = ("0", "1", "both")


@dataclass(frozen=True)
class RunConfig:
    command: Optional[str]
    pmax: int
    klass: Optional[ClassTuple]
    epsilon: str
    out: Optional[str]
    fmt: str
    jobs: int
    cache_dir: Optional[str]
    table_dir: str
    held_out: int
    per_class: int
    progress: bool

    @classmethod
    def from_config(cls, config: Config, **overrides) -> "RunConfig":
        base = cls(
            command=None,
            pmax=config.PMAX,
            klass=None,
            epsilon="both",
            out=None,
            fmt="json",
            jobs=config.JOBS,
            cache_dir=config.CACHE_DIR,
            table_dir=config.TABLE_DIR,
            held_out=config.HELD_OUT,
            per_class=config.PER_CLASS,
            progress=config.PROGRESS,
        )
        return base.narrow(**overrides)

    def narrow(self, **overrides) -> "RunConfig":
        """Copy with every non-None override applied"""
        run = replace(self, **{k: v for k, v in overrides.items() if v is not None})
        if run.epsilon not in EPSILON_CHOICES:
            raise InputError(f"epsilon must be one of {', '.join(EPSILON_CHOICES)}")
        if run.jobs < 1:
            raise InputError(f"--jobs must be at least 1, got {run.jobs}")
        return run

    @property
    def epsilons(self) -> tuple[int, ...]:
        return (0, 1) if self.epsilon == "both" else (int(self.epsilon),)

    @property
    def cache(self) -> IndexCache:
        return IndexCache(self.cache_dir)

    def require_order_24_bound(self):
        if self.pmax < 73:
            raise InputError(f"--pmax must be at least 73 for order-24 commands, got {self.pmax}")


def handles_errors(command):
    """Report library errors on stderr and exit with their code"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except CyclodiffError as e:
            logger.error(f"{type(e).__name__}: {e}")
            click.echo(f"Error: {e}", err=True)
            click.get_current_context().exit(e.exit_code)

    return wrapper


def parse_class(ctx, param, value) -> Optional[ClassTuple]:
    if value is None:
        return None
    try:
        return ClassTuple.parse(value)
    except InputError as e:
        raise click.BadParameter(str(e))


@click.group()
@click.option("--jobs", type=int, default=None, help="Worker processes.")
@click.option("--cache", "cache_dir", default=None, help="Disk cache directory.")
@click.option("--no-progress", is_flag=True, help="Hide progress bars.")
@click.pass_context
def cli(ctx, jobs, cache_dir, no_progress):
    """Cyclotomic numbers of order 24 and the nonexistence of 24th-power
    residue difference sets."""
    config = ctx.obj if isinstance(ctx.obj, Config) else init_app()
    ctx.obj = RunConfig.from_config(config, jobs=jobs, cache_dir=cache_dir, progress=False if no_progress else None)


from . import commands  # noqa: E402,F401
