"""Event log records produced by a simulation run, plus JSONL round-trip."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from datetime import datetime

from .config import Roster, ScenarioPerturbation, SimConfig

LOG_FORMAT_VERSION = 1

TRACE_TIMESTAMPS = (
    "worker_pick_up_start",
    "worker_pick_up_end",
    "agv_arrival",
    "agv_journey_start",
    "agv_journey_end",
    "fl_placement_start",
    "fl_placement_end",
)


@dataclass
class PackageTrace:
    """Timestamps of one package's path from truck to storage shelf."""

    package_id: str
    supplier_id: str
    worker_id: str
    agv_id: str
    forklift_id: str
    block_id: str
    bay: int
    shelf: int
    worker_pick_up_start: datetime
    worker_pick_up_end: datetime
    agv_arrival: datetime
    agv_journey_start: datetime
    agv_journey_end: datetime
    fl_placement_start: datetime
    fl_placement_end: datetime


@dataclass
class ResourceRecord:
    """Per-resource process summary: arrival, first/last activity, waiting."""

    resource_id: str
    resource_kind: str  # supplier | worker | agv | forklift
    arrival_time: datetime
    process_start: datetime
    process_end: datetime
    waiting_time: float  # seconds, process_start - arrival_time
    discharge_start: datetime | None = None  # suppliers only
    discharge_end: datetime | None = None


@dataclass
class EventLog:
    """Complete record of one run: config, scenario, roster, traces, resources."""

    config: SimConfig
    scenario: ScenarioPerturbation
    roster: Roster
    traces: list[PackageTrace]
    resources: list[ResourceRecord]

    def trace_by_package(self) -> dict[str, PackageTrace]:
        return {t.package_id: t for t in self.traces}

    def resources_of_kind(self, kind: str) -> list[ResourceRecord]:
        return [r for r in self.resources if r.resource_kind == kind]

    def makespan_end(self) -> datetime:
        return max(t.fl_placement_end for t in self.traces)


def _dt(value: datetime) -> str:
    return value.isoformat(timespec="microseconds")


def _record_to_dict(record) -> dict:
    out = {}
    for f in fields(record):
        v = getattr(record, f.name)
        if isinstance(v, datetime):
            v = _dt(v)
        out[f.name] = v
    return out


def _dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def serialize_event_log(log: EventLog) -> str:
    """Render as JSON Lines: a header line, then one record per line."""
    header = {
        "kind": "header",
        "version": LOG_FORMAT_VERSION,
        "config": log.config.to_dict(),
        "scenario": log.scenario.to_dict(),
        "seed": log.config.seed,
        "roster": log.roster.to_dict(),
    }
    lines = [_dumps(header)]
    for trace in log.traces:
        d = _record_to_dict(trace)
        d["kind"] = "package_trace"
        lines.append(_dumps(d))
    for record in log.resources:
        d = _record_to_dict(record)
        d["kind"] = "resource_record"
        lines.append(_dumps(d))
    return "\n".join(lines) + "\n"


class LogParseError(ValueError):
    """Raised for structurally invalid event-log files."""


def parse_event_log(text: str) -> EventLog:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise LogParseError("empty event log")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as e:
        raise LogParseError(f"header is not valid JSON: {e}") from e
    if header.get("kind") != "header":
        raise LogParseError("first line must be the header record")
    config = SimConfig.from_dict(header["config"])
    scenario = ScenarioPerturbation.from_dict(header["scenario"])
    roster = Roster.from_dict(header["roster"])

    traces: list[PackageTrace] = []
    resources: list[ResourceRecord] = []
    trace_fields = {f.name for f in fields(PackageTrace)}
    resource_fields = {f.name for f in fields(ResourceRecord)}
    for i, line in enumerate(lines[1:], start=2):
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as e:
            raise LogParseError(f"line {i}: invalid JSON: {e}") from e
        kind = rec.pop("kind", None)
        if kind == "package_trace":
            if set(rec) != trace_fields:
                raise LogParseError(f"line {i}: package_trace fields mismatch")
            for name in TRACE_TIMESTAMPS:
                rec[name] = datetime.fromisoformat(rec[name])
            traces.append(PackageTrace(**rec))
        elif kind == "resource_record":
            if set(rec) != resource_fields:
                raise LogParseError(f"line {i}: resource_record fields mismatch")
            for name in ("arrival_time", "process_start", "process_end",
                         "discharge_start", "discharge_end"):
                if rec[name] is not None:
                    rec[name] = datetime.fromisoformat(rec[name])
            resources.append(ResourceRecord(**rec))
        else:
            raise LogParseError(f"line {i}: unknown record kind {kind!r}")
    return EventLog(config=config, scenario=scenario, roster=roster,
                    traces=traces, resources=resources)
