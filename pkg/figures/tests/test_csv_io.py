import pytest

from gmac_figures.csv_io import CsvFormatError, read_curve_csv

from conftest import HEADER, write_curve


def test_read_valid_curve(tmp_path):
    path = write_curve(
        tmp_path / "c.csv", "binary", {"p": 0.2},
        [(0.0, 0.72, 0.5), (1.0, 0.0, 0.0)],
    )
    curve = read_curve_csv(path)
    assert curve.model == "binary"
    assert curve.params == {"p": 0.2}
    assert curve.r0 == (0.0, 1.0)
    assert curve.r1 == (0.72, 0.0)
    assert curve.alpha_star == (0.5, 0.0)
    assert len(curve) == 2


def test_missing_file_names_path(tmp_path):
    with pytest.raises(FileNotFoundError) as err:
        read_curve_csv(tmp_path / "absent.csv")
    assert "absent.csv" in str(err.value)


def test_header_mismatch(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("model,params,R0,R1,alpha\nbinary,{},0,0,0\n")
    with pytest.raises(CsvFormatError) as err:
        read_curve_csv(path)
    assert "header" in str(err.value)


def test_non_finite_value_rejected(tmp_path):
    path = tmp_path / "nan.csv"
    path.write_text(HEADER + 'binary,"{""p"":0.2}",0,nan,0\n')
    with pytest.raises(CsvFormatError) as err:
        read_curve_csv(path)
    assert "not finite" in str(err.value)
    path.write_text(HEADER + 'binary,"{""p"":0.2}",inf,0.5,0\n')
    with pytest.raises(CsvFormatError):
        read_curve_csv(path)


def test_non_numeric_value_rejected(tmp_path):
    path = tmp_path / "word.csv"
    path.write_text(HEADER + 'binary,"{""p"":0.2}",0,zero,0\n')
    with pytest.raises(CsvFormatError) as err:
        read_curve_csv(path)
    assert "not a number" in str(err.value)


def test_wrong_column_count(tmp_path):
    path = tmp_path / "cols.csv"
    path.write_text(HEADER + "binary,0,0\n")
    with pytest.raises(CsvFormatError) as err:
        read_curve_csv(path)
    assert "5 columns" in str(err.value)


def test_empty_body_rejected(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text(HEADER)
    with pytest.raises(CsvFormatError) as err:
        read_curve_csv(path)
    assert "no data rows" in str(err.value)


def test_model_must_not_change_mid_file(tmp_path):
    path = tmp_path / "mixed.csv"
    path.write_text(
        HEADER
        + 'binary,"{""p"":0.2}",0,0.7,0.5\n'
        + 'gaussian,"{""p"":0.2}",0.5,0.3,0.2\n'
    )
    with pytest.raises(CsvFormatError) as err:
        read_curve_csv(path)
    assert "model changed" in str(err.value)


def test_bad_param_json(tmp_path):
    path = tmp_path / "params.csv"
    path.write_text(HEADER + 'binary,"{p:0.2}",0,0.7,0.5\n')
    with pytest.raises(CsvFormatError) as err:
        read_curve_csv(path)
    assert "param_json" in str(err.value)
