"""
Replay harness for tinyColor

Replays a workload against a configured stack (orientation strategy,
recursion policy, partition count), checks invariants as it goes, and
writes one JSON object per query plus a final summary object.
"""
import copy
import json
import os
import time
from collections import defaultdict, namedtuple

import numpy as np
from joblib import Parallel, delayed

import oracle
from errors import DomainError, InvariantViolation, PaletteExhausted
from implicit_color import amortized_bound
from implicit_color.policies import CoinSource, recursion_probability, threshold_for
from partition import PartitionedColorer
from workload import Delete, Insert, Query, SweepAll, load_workload

DEFAULT_CONFIG = {
    "coloring": {
        "policy": "det",
        "threshold_mult": 6,
        "palette_mult": 9
    },
    "orientation": {
        "strategy": "amortized",
        "cap_multiplier": 4,
        "rebuild_interval": 32
    },
    "partition": {
        "k": 1
    },
    "run": {
        "seed": 0,
        "out": "report.jsonl",
        "strict": False,
        "timings": False
    }
}

MIN_COIN_TRIALS = 100_000
COIN_CHUNK = 100_000


def merge_config(base, overrides):
    """Section-wise merge; None values in overrides are ignored"""
    merged = copy.deepcopy(base)
    for section, values in (overrides or {}).items():
        if isinstance(values, dict) and isinstance(merged.get(section), dict):
            merged[section].update({k: v for k, v in values.items() if v is not None})
        elif values is not None:
            merged[section] = values
    return merged


def load_config(path=None, overrides=None):
    """Load configuration: defaults, then config file, then overrides.

    An explicitly named file must exist and parse. Without a path,
    config.json in the working directory is used if present.
    """
    file_config = {}
    explicit = path is not None
    path = path or 'config.json'
    try:
        with open(path, 'r') as f:
            file_config = json.load(f)
    except FileNotFoundError:
        if explicit:
            print(f"❌ Error: {path} not found!")
            print("Copy the example configuration file and customize it:")
            print("  cp config.json.example config.json")
            raise SystemExit(1)
    except json.JSONDecodeError as e:
        print(f"❌ Error: {path} is not valid JSON: {e}")
        print("Please check the file format and try again.")
        raise SystemExit(1)

    config = merge_config(merge_config(DEFAULT_CONFIG, file_config), overrides)
    validate_config(config)
    return config


def validate_config(config):
    coloring = config['coloring']
    if coloring['threshold_mult'] <= 1:
        raise DomainError(f"threshold_mult must be > 1, got {coloring['threshold_mult']}")
    if coloring['palette_mult'] < coloring['threshold_mult'] + 3:
        raise DomainError("palette_mult must be >= threshold_mult + 3")
    if config['orientation']['cap_multiplier'] < 2:
        raise DomainError("cap_multiplier must be >= 2")
    if config['orientation']['rebuild_interval'] < 1:
        raise DomainError("rebuild_interval must be >= 1")
    if config['partition']['k'] < 1:
        raise DomainError("partition k must be >= 1")


def build_colorer(n, config):
    return PartitionedColorer(
        n,
        k=config['partition']['k'],
        seed=config['run']['seed'],
        policy=config['coloring']['policy'],
        orientation=config['orientation']['strategy'],
        cap_multiplier=config['orientation']['cap_multiplier'],
        rebuild_interval=config['orientation']['rebuild_interval'],
        threshold_mult=config['coloring']['threshold_mult'],
        palette_mult=config['coloring']['palette_mult'],
    )


class RunReport:
    """Per-query records plus the summary object of one replay"""

    def __init__(self, records, summary):
        self.records = records
        self.summary = summary

    @property
    def exit_code(self):
        if self.summary['conflicts'] or self.summary['invariant_violations']:
            return 1
        return 0

    def lines(self):
        for record in self.records + [self.summary]:
            yield json.dumps(record, sort_keys=True, separators=(',', ':'))

    def write(self, path):
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w') as f:
            for line in self.lines():
                f.write(line + '\n')
        return path


class _Replay:
    """State of one run while events are applied"""

    def __init__(self, n, config, verbose):
        self.n = n
        self.config = config
        self.verbose = verbose
        self.strict = config['run']['strict']
        self.deterministic = config['coloring']['policy'] == 'det'
        self.pc = build_colorer(n, config)
        self.records = []
        self.vstar_sizes = []
        self.conflicts = 0
        self.sweeps = 0
        self.epochs = []
        self.timings = defaultdict(list)

    def log(self, message):
        if self.verbose:
            print(message)

    # --- updates ---

    def update(self, op, u, v, line_no):
        self.close_epoch()
        self.pc.route_update(op, u, v)
        if self.strict:
            graphs = [self.pc.graph] + [inst.graph for inst in self.pc.instances]
            for graph in graphs:
                bad = oracle.orientation_violations(graph)
                if bad:
                    raise InvariantViolation(
                        f"line {line_no}: outdegree above cap {graph.d_cap} at nodes {bad[:5]}")
        else:
            for x in (u, v):
                inst = self.pc.instance_of(x)
                if inst.graph.outdegree(inst.local_of[x]) > inst.graph.d_cap:
                    raise InvariantViolation(
                        f"line {line_no}: node {x} outdegree above cap {inst.graph.d_cap}")

    def close_epoch(self):
        """Record colored/queried counts of the epoch that is about to end"""
        queried = colored = 0
        for inst in self.pc.instances:
            if inst.state.epoch == inst.graph.epoch:
                queried += inst.state.distinct_queries
                colored += len(inst.state.colored_nodes)
        if queried and (not self.epochs or self.epochs[-1]['epoch'] != self.pc.graph.epoch):
            self.epochs.append({
                "epoch": self.pc.graph.epoch,
                "queried": queried,
                "colored": colored,
                "ratio": round(colored / queried, 6),
            })

    # --- queries ---

    def query(self, u, line_no):
        try:
            answer = self.pc.query(u)
        except PaletteExhausted as e:
            raise InvariantViolation(f"line {line_no}: {e}")

        report = answer.report
        self.check_query(answer, line_no)
        if report.vstar_size:
            self.vstar_sizes.append(report.vstar_size)
        self.records.append({
            "type": "query",
            "line": line_no,
            "node": u,
            "color": answer.color,
            "local_color": report.color,
            "part": answer.part,
            "vstar_size": report.vstar_size,
            "triggers": len(report.trigger_arcs),
            "epoch": self.pc.graph.epoch,
            "d": answer.d,
        })
        return answer

    def check_query(self, answer, line_no):
        report = answer.report
        inst = self.pc.instances[answer.part]
        state, graph = inst.state, inst.graph

        if not 1 <= report.color <= state.palette_size:
            raise InvariantViolation(
                f"line {line_no}: color {report.color} outside [1, {state.palette_size}] (d={state.d})")

        if self.deterministic:
            bound = amortized_bound(state.distinct_queries, state.threshold, state.d)
            if len(state.colored_nodes) > bound:
                raise InvariantViolation(
                    f"line {line_no}: {len(state.colored_nodes)} colored after "
                    f"{state.distinct_queries} queries, bound {bound}")

        nodes = None if self.strict else state.recent_heads
        over = oracle.uncolored_count_violations(state, graph, nodes)
        if over:
            raise InvariantViolation(
                f"line {line_no}: uncolored nodes above {state.threshold} processed in-arcs: {over[:5]}")

        if self.strict:
            problems = oracle.verify_recursion_tree(report, state.last_vstar)
            if problems:
                raise InvariantViolation(f"line {line_no}: {problems[0]}")
            if graph.n <= oracle.AP_CHECK_LIMIT and not oracle.reconstruct_ap_invariant(state, graph):
                raise InvariantViolation(f"line {line_no}: processed-arc set does not match colored nodes")

    def sweep(self, line_no):
        for v in range(self.n):
            self.query(v, line_no)
        conflicts = oracle.verify_proper(self.pc.edges(), self.pc.colors())
        self.sweeps += 1
        self.conflicts += len(conflicts)
        if conflicts:
            self.log(f"✗ Sweep {self.sweeps} at line {line_no}: {len(conflicts)} conflicts, e.g. {conflicts[0]}")
        else:
            self.log(f"✓ Sweep {self.sweeps} at line {line_no}: {self.n} nodes, 0 conflicts")

    # --- driver ---

    def apply(self, line_no, event):
        started = time.perf_counter()
        if isinstance(event, Insert):
            self.update('insert', event.u, event.v, line_no)
            op = 'insert'
        elif isinstance(event, Delete):
            self.update('delete', event.u, event.v, line_no)
            op = 'delete'
        elif isinstance(event, Query):
            self.query(event.u, line_no)
            op = 'query'
        elif isinstance(event, SweepAll):
            self.sweep(line_no)
            op = 'sweep'
        else:
            raise DomainError(f"Unknown event {event!r}")
        self.timings[op].append(time.perf_counter() - started)

    def summary(self, violation=None):
        self.close_epoch()
        sizes = np.array(self.vstar_sizes or [0])
        summary = {
            "type": "summary",
            "n": self.n,
            "queries": len(self.records),
            "colorings": len(self.vstar_sizes),
            "vstar_max": int(sizes.max()),
            "vstar_mean": round(float(sizes.mean()), 6),
            "vstar_p99": round(float(np.percentile(sizes, 99)), 6),
            "distinct_colors": len({r['color'] for r in self.records}),
            "conflicts": self.conflicts,
            "sweeps": self.sweeps,
            "epochs": self.epochs,
            "invariant_violations": 1 if violation else 0,
        }
        if violation:
            summary["error"] = str(violation)
        if self.config['run']['timings']:
            summary["timings"] = {op: float(np.mean(values)) for op, values in self.timings.items()}
        return summary


def run(workload, config=None, out=None, verbose=True):
    """Replay a workload.

    Args:
        workload: Workload or path to a workload file
        config: Configuration dict (see load_config); defaults if None
        out: JSONL output path; nothing is written if None
        verbose: Print sweep results

    Returns:
        RunReport. An invariant violation still writes the partial report
        (summary marks it) before InvariantViolation is re-raised.
    """
    if isinstance(workload, (str, os.PathLike)):
        workload = load_workload(workload)
    config = merge_config(DEFAULT_CONFIG, config)
    validate_config(config)

    replay = _Replay(workload.n, config, verbose)
    try:
        for line_no, event in workload.events:
            replay.apply(line_no, event)
    except InvariantViolation as e:
        replay.log(f"✗ Invariant violated: {e}")
        report = RunReport(replay.records, replay.summary(violation=e))
        if out:
            report.write(out)
        raise

    report = RunReport(replay.records, replay.summary())
    if out:
        report.write(out)
        replay.log(f"✓ Wrote report: {out} ({len(report.records)} query records)")
    return report


def run_many(jobs, max_workers=None):
    """Run independent (workload, config) jobs in worker processes; reports in job order.

    max_workers=None uses every core.
    """
    parallel = Parallel(n_jobs=max_workers or -1)
    return parallel(delayed(run)(workload, config, None, False) for workload, config in jobs)


CoinExperiment = namedtuple('CoinExperiment', ['d', 'trials', 'seed', 'empirical', 'analytic', 'max_deviation'])


def coin_experiment(d, trials, seed=0, threshold_mult=6):
    """Monte Carlo of the coin sequence one node sees under the randomized policy.

    Each trial feeds the node processed in-arcs 1..t, tossing the policy's
    coin after each, and records the position of the first heads (the last
    coin is certain). The frequencies are compared with the analytic
    distribution from the oracle.
    """
    if d < 2:
        raise DomainError(f"d must be >= 2, got {d}")
    if trials < MIN_COIN_TRIALS:
        raise DomainError(f"trials must be >= {MIN_COIN_TRIALS}, got {trials}")

    t = threshold_for(d, threshold_mult)
    probs = np.array([recursion_probability(j, d, threshold_mult) for j in range(1, t + 1)])
    coins = CoinSource(seed)
    counts = np.zeros(t, dtype=np.int64)
    remaining = trials
    while remaining:
        size = min(COIN_CHUNK, remaining)
        heads = coins.block((size, t)) < probs
        counts += np.bincount(heads.argmax(axis=1), minlength=t)
        remaining -= size

    empirical = counts / trials
    analytic = np.array([float(p) for p in oracle.trigger_pmf_analytic(d, threshold_mult)])
    return CoinExperiment(
        d=d, trials=trials, seed=seed,
        empirical=empirical.tolist(),
        analytic=analytic.tolist(),
        max_deviation=float(np.max(np.abs(empirical - analytic))),
    )
