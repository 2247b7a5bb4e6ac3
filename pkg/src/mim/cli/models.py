from enum import IntEnum


class ExitStatus(IntEnum):
    OK = 0
    USAGE = 1  # usage, I/O or format error
    NOT_STAR123_FREE = 2
    VERIFICATION_FAILED = 3
