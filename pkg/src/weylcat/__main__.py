from weylcat.cli import entry

entry()
