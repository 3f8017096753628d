"""
Execução da CLI em processo, capturando saída e código de saída.

Usado pelo lançador `novk.py` e pelos testes.
"""
import io
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass
from typing import Sequence

from .management.commands.novk import Command

PROG = 'novk'


@dataclass(frozen=True)
class DispatchResult:
    status: int
    stdout: str
    stderr: str


def cmd_dispatch(argv: Sequence[str]) -> DispatchResult:
    """
    Roda `novk <argv>` e devolve (código, stdout, stderr).

    0 sucesso, 1 erro de domínio (mensagem em stderr), 2 erro de uso
    (texto de uso do argparse em stderr).
    """
    out, err = io.StringIO(), io.StringIO()
    command = Command(stdout=out, stderr=err)
    status = 0
    with redirect_stdout(out), redirect_stderr(err):
        try:
            command.run_from_argv([PROG, PROG, *argv])
        except SystemExit as e:
            status = e.code if isinstance(e.code, int) else 1
    return DispatchResult(status, out.getvalue(), err.getvalue())
