from .models import ExitStatus
from .router import CommandRouter, arg

__all__ = ["ExitStatus", "CommandRouter", "arg"]
