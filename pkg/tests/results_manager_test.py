import csv
import json

from gg_cohomology.results_manager import Result


class TestResult:
    def test_str_is_sorted_json(self):
        text = str(Result({"b": 1, "a": [1, 2]}))
        assert json.loads(text) == {"a": [1, 2], "b": 1}
        assert text.index('"a"') < text.index('"b"')

    def test_save_writes_json_and_csv(self, tmp_path):
        rows = [{"type": "(1,1)", "passed": True}, {"type": "(2,0)", "passed": False, "note": "x"}]
        path = Result({"passed": False}, rows).save_to_file(tmp_path / "out" / "report.json")
        assert json.loads(path.read_text()) == {"passed": False}
        with open(path.with_suffix(".csv"), newline="", encoding="utf-8") as f:
            reader = csv.DictReader(f)
            assert reader.fieldnames == ["note", "passed", "type"]
            assert [row["type"] for row in reader] == ["(1,1)", "(2,0)"]

    def test_no_rows_no_csv(self, tmp_path):
        path = Result({"passed": True}).save_to_file(tmp_path / "report.json")
        assert not path.with_suffix(".csv").exists()

    def test_load(self, tmp_path):
        path = Result({"seed": 5}).save_to_file(tmp_path / "report.json")
        assert Result().load_from_file(path).payload == {"seed": 5}
