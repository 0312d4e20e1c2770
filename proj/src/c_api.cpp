// C surface lands with the CLI
