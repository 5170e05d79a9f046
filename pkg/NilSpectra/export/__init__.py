from . import AlgebraDocument, FormDocument, ResultWriter

__all__ = [
    "AlgebraDocument",
    "FormDocument",
    "ResultWriter",
]
