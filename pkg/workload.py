"""
Workload files: event types, parser and renderer

Format (line oriented, '#' starts a comment, blank lines ignored):

    n <count>      header, first non-comment line
    + u v          insert edge {u, v}
    - u v          delete edge {u, v}
    ? u            query the color of u
    ! all          query every node, then check the coloring

See docs/WORKLOAD_FORMAT.md.
"""

from collections import namedtuple

from errors import ParseError

Insert = namedtuple('Insert', ['u', 'v'])
Delete = namedtuple('Delete', ['u', 'v'])
Query = namedtuple('Query', ['u'])
SweepAll = namedtuple('SweepAll', [])

# events: list of (line_no, event)
Workload = namedtuple('Workload', ['n', 'events'])


def _parse_node(token, n, line_no):
    try:
        v = int(token)
    except ValueError:
        raise ParseError(line_no, f"node id '{token}' is not an integer")
    if not 0 <= v < n:
        raise ParseError(line_no, f"node {v} out of range for n={n}")
    return v


def parse_lines(lines):
    """Parse workload text lines.

    Tracks the edge set while reading, so inserting a present edge or
    deleting an absent one is reported at its line.
    """
    n = None
    events = []
    present = set()

    for line_no, raw in enumerate(lines, start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        op = tokens[0]

        if n is None:
            if op != 'n' or len(tokens) != 2:
                raise ParseError(line_no, "expected header 'n <count>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(line_no, f"node count '{tokens[1]}' is not an integer")
            if n < 1:
                raise ParseError(line_no, f"node count must be positive, got {n}")
            continue

        if op in ('+', '-'):
            if len(tokens) != 3:
                raise ParseError(line_no, f"'{op}' takes two node ids")
            u = _parse_node(tokens[1], n, line_no)
            v = _parse_node(tokens[2], n, line_no)
            if u == v:
                raise ParseError(line_no, f"self-loop on node {u}")
            key = (min(u, v), max(u, v))
            if op == '+':
                if key in present:
                    raise ParseError(line_no, f"edge {{{u}, {v}}} inserted twice")
                present.add(key)
                events.append((line_no, Insert(u, v)))
            else:
                if key not in present:
                    raise ParseError(line_no, f"edge {{{u}, {v}}} deleted but not present")
                present.remove(key)
                events.append((line_no, Delete(u, v)))
        elif op == '?':
            if len(tokens) != 2:
                raise ParseError(line_no, "'?' takes one node id")
            events.append((line_no, Query(_parse_node(tokens[1], n, line_no))))
        elif op == '!':
            if tokens[1:] != ['all']:
                raise ParseError(line_no, "expected '! all'")
            events.append((line_no, SweepAll()))
        elif op == 'n':
            raise ParseError(line_no, "duplicate header")
        else:
            raise ParseError(line_no, f"unknown event '{op}'")

    if n is None:
        raise ParseError(0, "missing header 'n <count>'")
    return Workload(n=n, events=events)


def parse_text(text):
    return parse_lines(text.splitlines())


def load_workload(path):
    with open(path, 'r') as f:
        return parse_lines(f)


def event_line(event):
    """One event in workload syntax"""
    if isinstance(event, Insert):
        return f"+ {event.u} {event.v}"
    if isinstance(event, Delete):
        return f"- {event.u} {event.v}"
    if isinstance(event, Query):
        return f"? {event.u}"
    return "! all"


def render_workload(workload, comments=()):
    """Workload text in the file format, rendered from the workload template"""
    from template_utils import templates
    return templates.render_workload(
        n=workload.n,
        lines=[event_line(event) for _, event in workload.events],
        comments=list(comments),
    )


def save_workload(workload, path, comments=()):
    with open(path, 'w') as f:
        f.write(render_workload(workload, comments))
    print(f"✓ Wrote workload: {path} (n={workload.n}, {len(workload.events)} events)")
    return path
