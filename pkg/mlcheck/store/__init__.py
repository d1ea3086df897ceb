from .client import ReportStore

__all__ = ['ReportStore']
