import numpy as np
import pytest

from pearson_kmeans.errors import ConstantSeriesError, EmptyDatasetError, LengthMismatchError, ParseError
from pearson_kmeans.series_core import NormalizationConvention
from pearson_kmeans.ucr import format_ucr, load_ucr, parse_ucr, write_ucr


def write(tmp_path, text, name="data.txt"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_smallest_file(tmp_path):
    data = load_ucr(write(tmp_path, "1, 0, 1, 2\n2, 2, 1, 0\n"))
    assert (data.n, data.T) == (2, 3)
    assert set(data.class_labels) == {"1", "2"} and data.class_count == 2
    assert data.name == "data"
    h = 1 / np.sqrt(2)
    np.testing.assert_allclose(data.dataset.values, [[-h, 0, h], [h, 0, -h]], atol=1e-12)


def test_whitespace_file(tmp_path):
    text = "  1.0000000e+00   1.5  2.5 \t 3.5\n\n 2.0000000e+00  -1  0  4\n"
    data = load_ucr(write(tmp_path, text))
    assert data.class_labels == ("1.0000000e+00", "2.0000000e+00")
    assert data.T == 3


def test_population_sigma_convention(tmp_path):
    data = load_ucr(write(tmp_path, "a,1,2,3\n"), NormalizationConvention.POPULATION_SIGMA)
    np.testing.assert_allclose(data.dataset.values[0], [-np.sqrt(1.5), 0, np.sqrt(1.5)], atol=1e-12)


def test_ragged_names_line(tmp_path):
    with pytest.raises(LengthMismatchError, match="line 3"):
        load_ucr(write(tmp_path, "1,0,1,2\n2,2,1,0\n1,1,2\n"))


def test_constant_row_dropped(tmp_path):
    p = write(tmp_path, "1, 0, 1, 2\n3, 5, 5, 5\n2, 2, 1, 0\n")
    with pytest.raises(ConstantSeriesError) as info:
        load_ucr(p)
    assert info.value.rows == [2]
    data = load_ucr(p, drop_constant=True)
    assert data.n == 2 and data.dropped_lines == (2,)
    assert data.class_labels == ("1", "2")


def test_all_constant(tmp_path):
    with pytest.raises(EmptyDatasetError):
        load_ucr(write(tmp_path, "1,3,3\n2,4,4\n"), drop_constant=True)
    with pytest.raises(EmptyDatasetError):
        load_ucr(write(tmp_path, "\n# nothing\n", "empty.txt"))


@pytest.mark.parametrize(
    "text, line",
    [
        ("1,0,1\n2,0,x\n", 2),
        ("1,0\n", 1),
        ("1,0,nan\n", 1),
        (",0,1\n", 1),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_ucr(text.splitlines())
    assert info.value.line == line


def test_round_trip(tmp_path):
    rng = np.random.default_rng(0)
    rows = rng.normal(size=(4, 9))
    labels = ["a", "b", "a", "c"]
    p = tmp_path / "rt.csv"
    write_ucr(p, labels, rows)
    parsed_labels, parsed, _ = parse_ucr(p.read_text().splitlines())
    assert parsed_labels == labels
    assert np.array_equal(np.vstack(parsed), rows)
    with pytest.raises(ValueError):
        format_ucr(["bad label"], rows[:1])
