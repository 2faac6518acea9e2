# mechanisms/base.py
# ShuffleLDP v1.0.0 - Interfaccia base dei randomizer locali
# ============================================================================

from abc import ABC, abstractmethod
from typing import Any, Dict, Sequence, Tuple

from core.errors import InvalidParameterError
from core.randomness import RandomnessStream


class LocalRandomizer(ABC):
    """
    Classe base astratta per i randomizer locali sequenziali.

    Un randomizer riceve l'intera sequenza delle uscite precedenti (può
    sceglierle in modo adattivo), l'elemento del client e uno stream di
    casualità, e produce un simbolo. Per ogni fissaggio delle uscite
    precedenti la mappa sull'elemento deve essere ε₀-DP.

    Attributes:
        name: Nome descrittivo del randomizer
        description: Descrizione breve
        epsilon0: Budget locale dichiarato
        domain: Valori di input ammessi (per le enumerazioni esatte)
    """

    name = "Base Randomizer"
    description = "Randomizer base - non usare direttamente"
    domain: Tuple[Any, ...] = ()

    def __init__(self, epsilon0: float):
        if not (epsilon0 > 0):
            raise InvalidParameterError(f"epsilon0 deve essere > 0, ottenuto {epsilon0}")
        self.epsilon0 = float(epsilon0)

    @abstractmethod
    def output_distribution(self, prior: Sequence[Any], x: Any) -> Dict[Any, float]:
        """
        Distribuzione esatta dell'uscita dato il prefisso e l'input.

        Args:
            prior: Uscite z_1 … z_{i−1} già prodotte
            x: Elemento del client

        Returns:
            Dict simbolo → probabilità (somma 1)
        """
        pass

    def randomize(self, prior: Sequence[Any], x: Any, rng: RandomnessStream) -> Any:
        """
        Campiona un'uscita per inversione della CDF (una sola uniforme).

        I simboli sono ordinati per renderla deterministica.
        """
        dist = self.output_distribution(prior, x)
        u = rng.next_uniform()
        cumulative = 0.0
        last = None
        for symbol in sorted(dist):
            cumulative += dist[symbol]
            last = symbol
            if u < cumulative:
                return symbol
        return last

    @property
    def descriptor(self) -> Tuple[Any, ...]:
        """Descrizione confrontabile: due randomizer identici hanno lo stesso descriptor."""
        return (type(self).__name__, self.epsilon0)

    def _check_input(self, x: Any) -> None:
        if self.domain and x not in self.domain:
            raise InvalidParameterError(f"{self.name}: input {x!r} fuori dal dominio {self.domain}")

    def __repr__(self) -> str:
        return f"{type(self).__name__}(epsilon0={self.epsilon0!r})"
