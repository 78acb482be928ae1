import math

import pytest

from gadfigures import (
    FigureSpec,
    MissingColumn,
    UnreadableInput,
    build,
    load_table,
    render,
)

EIGHT_OVER_PI_SQ = 8.0 / math.pi**2


def spec_for(figure, inputs, output):
    return FigureSpec(
        figure=figure, input_paths=tuple(str(p) for p in inputs), output_path=str(output)
    )


class TestTables:
    def test_loads_columns(self, tables_dir):
        table = load_table(tables_dir / "sweep_d.csv")
        assert table.has("eta")
        etas = table.floats("eta")
        assert etas[0] == 0.0
        assert etas[-1] == 1.0

    def test_missing_column(self, tables_dir):
        table = load_table(tables_dir / "sweep_d.csv")
        with pytest.raises(MissingColumn):
            table.strings("no_such_column")

    def test_unreadable_inputs(self, tmp_path):
        with pytest.raises(UnreadableInput):
            load_table(tmp_path / "absent.csv")
        empty = tmp_path / "empty.csv"
        empty.write_text("")
        with pytest.raises(UnreadableInput):
            load_table(empty)
        header_only = tmp_path / "header.csv"
        header_only.write_text("time,eta\n")
        with pytest.raises(UnreadableInput):
            load_table(header_only)
        binary = tmp_path / "blob.csv"
        binary.write_bytes(bytes(range(256)) * 4)
        with pytest.raises(UnreadableInput):
            load_table(binary)

    def test_non_numeric_column(self, tables_dir):
        table = load_table(tables_dir / "asymptotic.csv")
        with pytest.raises(UnreadableInput):
            table.floats("state")


class TestSpec:
    def test_rejects_unknown_figure(self):
        with pytest.raises(ValueError):
            FigureSpec(figure="fig9", input_paths=("a.csv",), output_path="x.pdf")

    def test_rejects_empty_inputs(self):
        with pytest.raises(ValueError):
            FigureSpec(figure="fig3", input_paths=(), output_path="x.pdf")


class TestFig3:
    def test_two_panel_layout(self, tables_dir, tmp_path):
        spec = spec_for(
            "fig3",
            [
                tables_dir / "sweep_d.csv",
                tables_dir / "exp_d.csv",
                tables_dir / "sweep_v.csv",
                tables_dir / "exp_v.csv",
            ],
            tmp_path / "fig3.pdf",
        )
        fig = build(spec)
        assert len(fig.axes) == 2
        for ax in fig.axes:
            # five theory curves and five error-bar series per panel
            assert len(ax.lines) >= 5
            assert len(ax.containers) == 5
        render(spec)
        payload = (tmp_path / "fig3.pdf").read_bytes()
        assert payload.startswith(b"%PDF")
        assert len(payload) > 5000

    def test_theory_only_single_panel(self, tables_dir, tmp_path):
        spec = spec_for("fig3", [tables_dir / "sweep_d.csv"], tmp_path / "one.pdf")
        fig = build(spec)
        assert len(fig.axes) == 1
        assert len(fig.axes[0].lines) == 5


class TestFig4:
    def test_six_curves(self, tables_dir, tmp_path):
        spec = spec_for("fig4", [tables_dir / "asymptotic.csv"], tmp_path / "fig4.svg")
        fig = build(spec)
        (ax,) = fig.axes
        assert len(ax.lines) == 6
        styles = sorted(line.get_linestyle() for line in ax.lines)
        assert styles == ["-", "-", "-", ":", ":", ":"]
        colors = {line.get_color() for line in ax.lines}
        assert colors == {"tab:red", "tab:green", "tab:blue"}
        render(spec)
        assert (tmp_path / "fig4.svg").read_bytes().startswith(b"<?xml")

    def test_dotted_curve_dominates_solid(self, tables_dir, tmp_path):
        # the lower bound never exceeds the produced entropy
        spec = spec_for("fig4", [tables_dir / "asymptotic.csv"], tmp_path / "f.pdf")
        fig = build(spec)
        (ax,) = fig.axes
        for dotted, solid in zip(ax.lines[::2], ax.lines[1::2]):
            for ds, low in zip(dotted.get_ydata(), solid.get_ydata()):
                assert low <= ds + 1e-12


class TestSupp:
    def test_coherent_separates_classical_coincides(self, tables_dir, tmp_path):
        spec = spec_for(
            "supp",
            [tables_dir / "sweep_v.csv", tables_dir / "sweep_d.csv"],
            tmp_path / "supp.pdf",
        )
        fig = build(spec)
        assert len(fig.axes) == 2
        gaps = []
        for ax in fig.axes:
            assert len(ax.lines) == 3
            wy = ax.lines[1].get_ydata()
            qf = ax.lines[2].get_ydata()
            gaps.append(max(abs(a - b) for a, b in zip(wy, qf)))
        assert gaps[0] < 1e-10  # classical input: metrics coincide
        assert gaps[1] > 1e-3  # coherent input: metrics split
        render(spec)
        assert (tmp_path / "supp.pdf").exists()

    def test_column_level_split(self, tables_dir):
        # same statement on the raw columns, independent of any plotting
        classical = load_table(tables_dir / "sweep_v.csv")
        coherent = load_table(tables_dir / "sweep_d.csv")

        def gap(table):
            wy = table.floats("l_wy_eq")
            qf = table.floats("l_qf_eq")
            return max(
                abs(EIGHT_OVER_PI_SQ * (a * a - b * b)) for a, b in zip(wy, qf)
            )

        assert gap(classical) < 1e-10
        assert gap(coherent) > 1e-3

    def test_estimates_stay_below_relative_entropy(self, tables_dir, tmp_path):
        spec = spec_for("supp", [tables_dir / "sweep_d.csv"], tmp_path / "s.pdf")
        fig = build(spec)
        (ax,) = fig.axes
        relent = ax.lines[0].get_ydata()
        for line in ax.lines[1:]:
            for estimate, truth in zip(line.get_ydata(), relent):
                assert estimate <= truth + 1e-9


class TestRendering:
    def test_all_figures_render_from_fresh_tables(self, tables_dir, tmp_path):
        jobs = (
            ("fig3", ["sweep_d.csv", "exp_d.csv", "sweep_v.csv", "exp_v.csv"]),
            ("fig4", ["asymptotic.csv"]),
            ("supp", ["sweep_d.csv", "sweep_v.csv"]),
        )
        for figure, names in jobs:
            for suffix in ("pdf", "png"):
                out = tmp_path / f"{figure}.{suffix}"
                render(spec_for(figure, [tables_dir / n for n in names], out))
                assert out.stat().st_size > 1000

    def test_byte_determinism(self, tables_dir, tmp_path):
        first = tmp_path / "a.pdf"
        second = tmp_path / "b.pdf"
        for out in (first, second):
            render(spec_for("supp", [tables_dir / "sweep_d.csv"], out))
        assert first.read_bytes() == second.read_bytes()

    def test_format_override(self, tables_dir, tmp_path):
        out = tmp_path / "noext"
        spec = FigureSpec(
            figure="fig4",
            input_paths=(str(tables_dir / "asymptotic.csv"),),
            output_path=str(out),
            image_format="png",
        )
        render(spec)
        assert out.read_bytes().startswith(b"\x89PNG")

    def test_default_format_is_vector(self, tables_dir, tmp_path):
        out = tmp_path / "bare_name"
        render(spec_for("fig4", [tables_dir / "asymptotic.csv"], out))
        assert out.read_bytes().startswith(b"%PDF")

    def test_missing_column_propagates(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("time,eta\n0,0\n")
        with pytest.raises(MissingColumn):
            render(spec_for("supp", [bad], tmp_path / "x.pdf"))
