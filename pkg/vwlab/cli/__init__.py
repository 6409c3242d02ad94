from vwlab.cli.main import build_parser, main
