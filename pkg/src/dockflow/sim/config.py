"""Simulation configuration, fleet roster and bottleneck scenario definitions."""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from datetime import datetime

DEFAULT_ANCHOR = datetime(2025, 1, 6, 8, 0, 0)

SUPPLIER_NAMES = [
    "AuroraFarms",
    "BlackSheepDist",
    "CamelCargo",
    "DeltaDrops",
    "EvergreenEdge",
]

SCENARIO_BASELINE = "baseline"
SCENARIO_STAGE_TRANSFER = "stage_transfer_delay"
SCENARIO_SUPPLIER_PROCESSING = "supplier_processing_delay"
SCENARIO_DEGRADED_FORKLIFT = "degraded_forklift"
SCENARIO_IDS = (
    SCENARIO_BASELINE,
    SCENARIO_STAGE_TRANSFER,
    SCENARIO_SUPPLIER_PROCESSING,
    SCENARIO_DEGRADED_FORKLIFT,
)

# AGV trip distances are drawn uniformly in [mean - spread, mean + spread]
# per (dock, block) pair, so the fleet-wide mean stays at the configured mean.
AGV_DISTANCE_SPREAD_M = 40.0


class ConfigError(ValueError):
    """Invalid simulation or scenario configuration; names the offending field."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field_name = field_name


@dataclass
class SimConfig:
    """Parameters of the unloading flow (counts, speeds, distances, timing)."""

    num_suppliers: int = 5
    packages_min: int = 30
    packages_max: int = 35
    num_workers: int = 12
    workers_per_supplier: int = 4
    num_agvs: int = 20
    num_forklifts: int = 5
    num_blocks: int = 5
    bays_per_block: int = 15
    shelves_per_bay: int = 3
    supplier_speed: float = 20.0  # km/h
    worker_speed: float = 2.0  # km/h
    agv_speed: float = 3.5  # km/h
    forklift_speed: float = 5.0  # km/h
    agv_distance_mean: float = 140.0  # meters
    worker_oneway_distance: float = 16.0  # meters, supplier to waiting point
    forklift_oneway_distance: float = 31.0  # meters, pickup point to bay
    storage_time_min: float = 60.0  # seconds
    storage_time_max: float = 90.0  # seconds
    supplier_interval: float = 1800.0  # seconds between arrivals
    max_concurrent_unloads: int = 3
    sim_anchor: datetime = DEFAULT_ANCHOR
    seed: int = 0

    def validate(self) -> None:
        counts = (
            "num_suppliers", "packages_min", "packages_max", "num_workers",
            "workers_per_supplier", "num_agvs", "num_forklifts", "num_blocks",
            "bays_per_block", "shelves_per_bay", "max_concurrent_unloads",
        )
        for name in counts:
            if getattr(self, name) <= 0:
                raise ConfigError(name, "must be a positive count")
        for name in ("supplier_speed", "worker_speed", "agv_speed", "forklift_speed"):
            if getattr(self, name) <= 0:
                raise ConfigError(name, "must be a positive speed")
        for name in ("agv_distance_mean", "worker_oneway_distance",
                     "forklift_oneway_distance", "supplier_interval"):
            if getattr(self, name) < 0:
                raise ConfigError(name, "must be non-negative")
        if self.packages_min > self.packages_max:
            raise ConfigError("packages_min", "must be <= packages_max")
        if self.storage_time_min > self.storage_time_max:
            raise ConfigError("storage_time_min", "must be <= storage_time_max")
        if self.storage_time_min < 0:
            raise ConfigError("storage_time_min", "must be non-negative")
        if self.num_workers < self.workers_per_supplier * self.max_concurrent_unloads:
            raise ConfigError(
                "num_workers",
                "must cover workers_per_supplier x max_concurrent_unloads",
            )
        if self.num_forklifts != self.num_blocks:
            raise ConfigError("num_forklifts", "one forklift per block is required")
        if self.seed < 0 or self.seed >= 2 ** 64:
            raise ConfigError("seed", "must fit in an unsigned 64-bit integer")

    @property
    def block_capacity(self) -> int:
        return self.bays_per_block * self.shelves_per_bay

    @property
    def total_capacity(self) -> int:
        return self.block_capacity * self.num_blocks

    def to_dict(self) -> dict:
        d = {}
        for f in fields(self):
            v = getattr(self, f.name)
            d[f.name] = v.isoformat(timespec="microseconds") if isinstance(v, datetime) else v
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "SimConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(sorted(unknown)[0], "unknown configuration field")
        kwargs = dict(data)
        if "sim_anchor" in kwargs and isinstance(kwargs["sim_anchor"], str):
            kwargs["sim_anchor"] = datetime.fromisoformat(kwargs["sim_anchor"])
        cfg = cls(**kwargs)
        cfg.validate()
        return cfg


@dataclass
class Roster:
    """Resource identifiers present in a simulated run."""

    suppliers: list[str]
    workers: list[str]
    agvs: list[str]
    forklifts: list[str]
    blocks: list[str]

    def to_dict(self) -> dict:
        return {
            "suppliers": list(self.suppliers),
            "workers": list(self.workers),
            "agvs": list(self.agvs),
            "forklifts": list(self.forklifts),
            "blocks": list(self.blocks),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Roster":
        return cls(
            suppliers=list(data["suppliers"]),
            workers=list(data["workers"]),
            agvs=list(data["agvs"]),
            forklifts=list(data["forklifts"]),
            blocks=list(data["blocks"]),
        )


def build_roster(config: SimConfig) -> Roster:
    """Fleet ids: named suppliers, BW_xx workers, AGV_xx, FL_xx, blocks A..."""
    suppliers = []
    for i in range(config.num_suppliers):
        if i < len(SUPPLIER_NAMES):
            suppliers.append(SUPPLIER_NAMES[i])
        else:
            suppliers.append(f"Supplier_{i:02d}")
    return Roster(
        suppliers=suppliers,
        workers=[f"BW_{i:02d}" for i in range(config.num_workers)],
        agvs=[f"AGV_{i:02d}" for i in range(config.num_agvs)],
        forklifts=[f"FL_{i:02d}" for i in range(config.num_forklifts)],
        blocks=[chr(ord("A") + i) for i in range(config.num_blocks)],
    )


@dataclass
class ScenarioPerturbation:
    """Injectable inefficiency applied on top of the baseline flow.

    stage_transfer_delay: intermittent extra wait between AGV drop-off and
    forklift pick-up for the target supplier's packages.
    supplier_processing_delay: the target supplier's worker handling
    durations are multiplied.
    degraded_forklift: the target forklift's service durations are
    multiplied for its whole shift.
    """

    scenario_id: str = SCENARIO_BASELINE
    target_entity: str = ""
    delay_probability: float = 0.3
    delay_min: float = 600.0  # seconds
    delay_max: float = 2400.0  # seconds
    handling_multiplier: float = 3.0
    service_multiplier: float = 1.25

    def validate(self, roster: Roster | None = None) -> None:
        if self.scenario_id not in SCENARIO_IDS:
            raise ConfigError("scenario_id", f"unknown scenario {self.scenario_id!r}")
        if not 0.0 <= self.delay_probability <= 1.0:
            raise ConfigError("delay_probability", "must be within [0, 1]")
        if self.delay_min < 0 or self.delay_min > self.delay_max:
            raise ConfigError("delay_min", "must satisfy 0 <= delay_min <= delay_max")
        if self.handling_multiplier < 1.0:
            raise ConfigError("handling_multiplier", "must be >= 1")
        if self.service_multiplier < 1.0:
            raise ConfigError("service_multiplier", "must be >= 1")
        if self.scenario_id == SCENARIO_BASELINE:
            return
        if not self.target_entity:
            raise ConfigError("target_entity", "required for non-baseline scenarios")
        if roster is not None:
            if self.scenario_id in (SCENARIO_STAGE_TRANSFER, SCENARIO_SUPPLIER_PROCESSING):
                pool, kind = roster.suppliers, "supplier"
            else:
                pool, kind = roster.forklifts, "forklift"
            if self.target_entity not in pool:
                raise ConfigError(
                    "target_entity",
                    f"{self.target_entity!r} is not a {kind} in the configured fleet",
                )

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: dict) -> "ScenarioPerturbation":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(sorted(unknown)[0], "unknown scenario field")
        sc = cls(**data)
        return sc


def baseline_scenario() -> ScenarioPerturbation:
    return ScenarioPerturbation(scenario_id=SCENARIO_BASELINE)


def load_run_spec(document: dict) -> tuple[SimConfig, ScenarioPerturbation]:
    """Parse a JSON run document holding "config" and "scenario" objects.

    Both sections are optional and mirror the dataclass field names exactly.
    """
    if not isinstance(document, dict):
        raise ConfigError("document", "run spec must be a JSON object")
    config = SimConfig.from_dict(document.get("config", {}))
    scenario = ScenarioPerturbation.from_dict(document.get("scenario", {}))
    scenario.validate(build_roster(config))
    return config, scenario
