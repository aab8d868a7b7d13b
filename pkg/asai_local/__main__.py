from asai_local.main import main


main()
