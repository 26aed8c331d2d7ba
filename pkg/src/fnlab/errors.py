"""Exception hierarchy shared by the whole package.

The CLI maps these onto its exit-code contract: ValidationError means bad
input (exit 2), PreconditionError means well-formed input that violates an
operation's precondition (exit 3).  InternalError marks situations the
underlying mathematics rules out; seeing one is a bug, never a user error.
"""


class FnlabError(Exception):
    pass


class ValidationError(FnlabError, ValueError):
    pass


class PreconditionError(FnlabError, ValueError):
    pass


class InternalError(FnlabError, AssertionError):
    pass
