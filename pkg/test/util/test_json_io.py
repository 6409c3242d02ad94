#!/usr/bin/env python3

"""Test JSON reading with schema validation, and the logging helpers
"""

import json
import logging
from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase, main

from vwlab.errors import SchemaError
from vwlab.util.json_io import dump_json, load_json, read_json_text
from vwlab.util.log_util import configure_logging, disable_all_logging

SCHEMA = {"type": "object", "required": ["n"], "properties": {"n": {"type": "integer"}}}


class TestLoadJson(TestCase):
    """Test sources, decode errors and schema errors
    """
    def test_sources(self):
        """Text, paths and parsed data are all accepted
        """
        self.assertEqual(load_json('{"n": 1}', SCHEMA), {"n": 1})
        self.assertEqual(load_json({"n": 2}, SCHEMA), {"n": 2})
        with TemporaryDirectory() as tmp:
            path = Path(tmp) / 'n.json'
            path.write_text('{"n": 3}', encoding='utf-8')
            self.assertEqual(load_json(path, SCHEMA), {"n": 3})
            self.assertEqual(load_json(str(path), SCHEMA), {"n": 3})
            self.assertEqual(read_json_text(path)[1], str(path))
        with self.assertRaises(TypeError):
            read_json_text(3)

    def test_errors(self):
        """Decode errors carry a line, schema errors a path
        """
        with self.assertRaises(SchemaError) as ctx:
            load_json('{\n"n": 1,\n}', SCHEMA)
        self.assertEqual(ctx.exception.line, 3)
        with self.assertRaises(SchemaError) as ctx:
            load_json('{"n": "one"}', SCHEMA)
        self.assertEqual(ctx.exception.path, 'n')
        self.assertIn("field 'n'", str(ctx.exception))

    def test_missing_file(self):
        """A path to nowhere is reported as a missing file, not as bad JSON
        """
        with TemporaryDirectory() as tmp:
            missing = str(Path(tmp) / 'nope.json')
            for source in (missing, Path(missing)):
                with self.assertRaises(SchemaError) as ctx:
                    load_json(source, SCHEMA)
                self.assertIn("file not found", str(ctx.exception))
                self.assertNotIn("invalid JSON", str(ctx.exception))
        self.assertEqual(read_json_text('  [1]'), ('  [1]', '<text>'))

    def test_dump(self):
        """Pretty and compact forms hold the same data
        """
        data = {"b": [1, 2], "a": "é"}
        self.assertEqual(json.loads(dump_json(data)), data)
        self.assertEqual(dump_json(data, pretty=False), '{"b":[1,2],"a":"é"}')


class TestLogging(TestCase):
    """Test the logging helpers
    """
    def tearDown(self):
        configure_logging()

    def test_configure(self):
        """Levels are set by name and JSON output is selectable
        """
        handler = configure_logging('debug', json_format=True)
        self.assertEqual(logging.getLogger().level, logging.DEBUG)
        self.assertIn(handler, logging.getLogger().handlers)
        self.assertEqual(type(handler.formatter).__name__, 'JsonFormatter')

    def test_disable_all_logging(self):
        """Records are dropped inside the block only
        """
        logger = logging.getLogger('vwlab.test')
        with disable_all_logging():
            with self.assertNoLogs(logger, level=logging.ERROR):
                logger.error("dropped")
        with self.assertLogs(logger, level=logging.ERROR):
            logger.error("kept")


if __name__ == "__main__":
    main()
