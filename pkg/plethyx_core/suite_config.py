"""
Verification suite presets.
"""

import json
import logging
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Dict, List, Optional

logger = logging.getLogger(__name__)


@dataclass
class SuiteConfig:
    """Size bounds for one verification suite."""
    id: str
    name: str
    max_n: int = 0
    max_weight: int = 0
    count: int = 0
    seed: int = 0
    max_cells: int = 0
    alphabet: int = 0
    max_inner: int = 0  # |mu| bound for skew checks
    notes: str = ""

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"Unknown suite config keys: {sorted(unknown)}")
        return cls(**data)

    def override(self, **values: Optional[int]) -> "SuiteConfig":
        """Copy with every non-None value replaced."""
        data = self.to_dict()
        data.update({k: v for k, v in values.items() if v is not None})
        return SuiteConfig.from_dict(data)


DEFAULT_SUITES = [
    {"id": "littlewood", "name": "Littlewood closed forms", "max_n": 8,
     "notes": "Sign tables of h_n and e_n against two-row and hook families"},
    {"id": "oracle", "name": "Power-sum oracle", "max_weight": 5,
     "notes": "Sign tables against Schur expansions of split_square"},
    {"id": "completeness", "name": "Kostka completeness", "max_weight": 6,
     "notes": "k_plus + k_minus equals the Kostka number"},
    {"id": "rsk-roundtrip", "name": "RSK round trips", "count": 10000, "seed": 7,
     "max_cells": 20, "alphabet": 8, "notes": "Inverse RSK and RSK~ on random words"},
    {"id": "jdt-order", "name": "Slide-order independence", "count": 1000, "seed": 11,
     "max_cells": 12, "alphabet": 5, "notes": "Random corner orders rectify alike"},
    {"id": "plactic", "name": "Plactic product", "count": 1000, "seed": 13,
     "max_cells": 8, "alphabet": 5, "notes": "Word insertion agrees with the tableau product"},
    {"id": "corollary-qi", "name": "Recording pieces", "max_weight": 3, "count": 1000,
     "seed": 17, "alphabet": 4, "notes": "Q_i equals Rect of the i-th recording piece"},
    {"id": "domino", "name": "Domino families", "max_n": 6,
     "notes": "Yamanouchi domino tableaux and cospin parity"},
    {"id": "symantisym", "name": "Product rule", "max_n": 3,
     "notes": "s_2 and s_11 of products of h_1, h_2, e_2"},
    {"id": "skew", "name": "Skew corollaries", "max_weight": 3, "max_inner": 2,
     "notes": "s_mu times the square split, both bases"},
]


class SuiteManager:
    """Manages suite presets loaded from JSON files."""

    def __init__(self, config_dir: str = "configs/suites"):
        self.config_dir = Path(config_dir)
        self._configs: Dict[str, SuiteConfig] = {}
        self.load_configs()

    def load_configs(self) -> None:
        """Load every preset; write the built-in ones if the directory is missing."""
        self._configs.clear()

        if not self.config_dir.exists():
            self.config_dir.mkdir(parents=True, exist_ok=True)
            self._create_default_configs()

        for config_file in sorted(self.config_dir.glob("*.json")):
            try:
                with open(config_file, "r", encoding="utf-8") as f:
                    config = SuiteConfig.from_dict(json.load(f))
                    self._configs[config.id] = config
            except (OSError, ValueError, TypeError) as e:
                logger.warning("Error loading suite config %s: %s", config_file, e)

        # built-in presets fill any gap left by the directory
        for data in DEFAULT_SUITES:
            self._configs.setdefault(data["id"], SuiteConfig.from_dict(data))

    def _create_default_configs(self) -> None:
        for data in DEFAULT_SUITES:
            config_file = self.config_dir / f"{data['id']}.json"
            with open(config_file, "w", encoding="utf-8") as f:
                json.dump(SuiteConfig.from_dict(data).to_dict(), f, indent=2)

    def get_config(self, suite_id: str) -> Optional[SuiteConfig]:
        return self._configs.get(suite_id)

    def get_all_configs(self) -> Dict[str, SuiteConfig]:
        return self._configs.copy()

    def get_config_list(self) -> List[SuiteConfig]:
        return [self._configs[k] for k in sorted(self._configs)]
