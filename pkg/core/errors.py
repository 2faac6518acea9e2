# core/errors.py
# ShuffleLDP v1.0.0 - Gerarchia eccezioni
# ============================================================================
# Tutte le eccezioni della libreria derivano da ShuffleLDPError: la CLI le
# converte in exit code 2 con un messaggio su una riga.
# ============================================================================


class ShuffleLDPError(Exception):
    """Base di tutti gli errori della libreria."""
    pass


class InvalidParameterError(ShuffleLDPError, ValueError):
    """Parametro fuori dominio (ε negativo, d non potenza di 2, ...)."""
    pass


class OutOfRegimeError(InvalidParameterError):
    """Ipotesi di un teorema violate: nessuna estrapolazione silenziosa."""
    pass


class MalformedReportError(InvalidParameterError):
    """Report (h, t, u) incoerente con l'albero (2^{h-1} non divide t, ...)."""
    pass


class ResourceGuardError(InvalidParameterError):
    """Simulazione troppo grande senza override esplicito."""
    pass


class InputParseError(InvalidParameterError):
    """Riga malformata in un file di input JSON-lines."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"riga {line_number}: {message}")
        self.line_number = line_number


class ProtocolError(ShuffleLDPError, RuntimeError):
    """Violazione del protocollo client (t fuori ordine, ε cambiato, ...)."""
    pass
