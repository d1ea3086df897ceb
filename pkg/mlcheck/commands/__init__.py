from .commands import COMMANDS, COEFF_GRID

__all__ = ['COMMANDS', 'COEFF_GRID']
