import json
import os
from dataclasses import dataclass, asdict
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..utils.errors import CheckpointMismatchError
from ..utils.logging_config import get_logger, DebugCategory

logger = get_logger(__name__)


@dataclass
class HuntCheckpoint:
    order: int
    mode: str
    seed: int
    last_completed: int
    outcome: Optional[Dict[str, Any]] = None

    @property
    def next_index(self) -> int:
        return self.last_completed + 1

    def save(self, path: Union[str, Path]) -> None:
        """Write atomically so an interrupted save never leaves a torn file"""
        path = Path(path)
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text(json.dumps(asdict(self), indent=2))
        os.replace(tmp, path)
        logger.debug(
            f"Checkpoint saved at index {self.last_completed} to {path}",
            extra={"category": DebugCategory.SEARCH.value}
        )

    @classmethod
    def load(cls, path: Union[str, Path]) -> Optional["HuntCheckpoint"]:
        path = Path(path)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_bytes().decode("utf-8"))
            return cls(
                order=int(data["order"]),
                mode=str(data["mode"]),
                seed=int(data["seed"]),
                last_completed=int(data["last_completed"]),
                outcome=data.get("outcome"),
            )
        except (UnicodeDecodeError, json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise CheckpointMismatchError(f"Unreadable checkpoint {path}: {e}") from e

    def ensure_matches(self, order: int, mode: str, seed: int) -> None:
        if (self.order, self.mode, self.seed) != (order, mode, seed):
            raise CheckpointMismatchError(
                f"Checkpoint is for order={self.order}, mode={self.mode}, seed={self.seed}; "
                f"requested order={order}, mode={mode}, seed={seed}"
            )
