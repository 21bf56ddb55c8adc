"""Figure rendering and standalone plot-script emission.

For every CSV the CLI emits a small self-contained matplotlib script and
also executes the same script text in-process, so the rendered PNG and the
script a user may re-run (or edit) cannot drift apart.
"""

from .errors import UnknownFigureKind

_PRELUDE = '''#!/usr/bin/env python3
"""Render the {kind} figure from {csv_name}."""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

names, rows = None, []
with open({csv!r}) as fh:
    for line in fh:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if names is None:
            names = line.split(",")
        else:
            rows.append([float(v) for v in line.split(",")])
table = np.asarray(rows, dtype=float).reshape(len(rows), len(names))
data = {{name: table[:, k] for k, name in enumerate(names)}}
fig, ax = plt.subplots(figsize={size}, dpi=160)
'''

_CODA = '''
fig.tight_layout()
fig.savefig({png!r})
'''

_BODIES = {
    "sos": '''
ax.scatter(data["x"], data["p"], s=0.25, c=data["seed"] % 10, cmap="tab10",
           linewidths=0, rasterized=True)
ax.set_xlim(0.0, data["x"].max())
ax.set_ylim(-np.pi, np.pi)
ax.set_xlabel("x")
ax.set_ylabel("p")
''',
    "heatmap": '''
t = np.unique(data["t"])
j = np.unique(data["j"])
grid = data["prob"].reshape(t.size, j.size)
mesh = ax.pcolormesh(j, t, grid, cmap="magma", shading="nearest")
fig.colorbar(mesh, ax=ax, label="P(j, t)")
ax.set_xlabel("site j")
ax.set_ylabel("t")
''',
    "spectrum": '''
ax.vlines(data["eigenphase"], 0.0, data["weight"], lw=1.5)
ax.plot(data["eigenphase"], data["weight"], "o", ms=3)
ax.set_xlim(-np.pi, np.pi)
ax.set_ylim(bottom=0.0)
ax.set_xlabel("quasienergy")
ax.set_ylabel("overlap weight")
''',
    "concurrence": '''
for name in names:
    if name != "t":
        ax.plot(data["t"], data[name], lw=1.0, label=name.replace("_", " "))
ax.set_xlabel("t")
ax.set_ylabel("concurrence")
ax.legend(frameon=False, fontsize=8)
''',
    "rotation": '''
ax.plot(data["p0"], data["nu"], lw=1.0)
ax.set_xlabel("p0")
ax.set_ylabel("rotation number")
''',
    "series": '''
for name in names[1:]:
    ax.plot(data[names[0]], data[name], lw=1.0, label=name)
ax.set_xlabel(names[0])
if len(names) > 2:
    ax.legend(frameon=False, fontsize=8)
else:
    ax.set_ylabel(names[1])
''',
}

_SIZES = {
    "sos": (4.8, 4.4),
    "heatmap": (5.2, 4.2),
    "spectrum": (5.2, 3.4),
    "concurrence": (5.6, 3.4),
    "rotation": (5.2, 3.4),
    "series": (5.2, 3.4),
}


def build_plot_script(csv_path: str, kind: str, png_path: str) -> str:
    """Source text of a standalone script rendering ``csv_path``."""
    if kind not in _BODIES:
        raise UnknownFigureKind(
            f"unknown figure kind {kind!r}; choose from {sorted(_BODIES)}"
        )
    csv_name = str(csv_path).rsplit("/", 1)[-1]
    prelude = _PRELUDE.format(
        kind=kind, csv_name=csv_name, csv=str(csv_path), size=_SIZES[kind]
    )
    return prelude + _BODIES[kind].strip("\n") + _CODA.format(png=str(png_path))


def emit_plot_script(csv_path, kind: str, script_path, png_path) -> None:
    with open(script_path, "w") as fh:
        fh.write(build_plot_script(str(csv_path), kind, str(png_path)))


def render_figure(csv_path, kind: str, png_path) -> None:
    """Execute the emitted script text in-process to produce the PNG."""
    import matplotlib.pyplot as plt

    script = build_plot_script(str(csv_path), kind, str(png_path))
    exec(compile(script, f"<{kind} figure>", "exec"), {"__name__": "__plot__"})
    plt.close("all")
