class GekrError(Exception):
    """Базовая ошибка пакета."""


class ArrayFormatError(GekrError, ValueError):
    """Текст массива не разбирается в корректную ArrayMatrix."""


class DomainError(GekrError, ValueError):
    """Параметр вне области определения операции."""


class NegativeDiscriminantError(DomainError):
    pass


class SearchOverflowError(DomainError):
    pass
